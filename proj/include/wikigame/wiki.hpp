#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wikigame::wiki {

using SentenceId = std::uint64_t;

struct Sentence {
  SentenceId id = 0;
  std::string owner;               // most recent major reviser or original author
  std::vector<std::string> tokens; // non-empty
};

struct WikiPage {
  std::vector<Sentence> sentences;
  std::uint64_t revision = 0;      // increments by one per applied edit
  SentenceId next_id = 1;
};

enum class EditKind {
  AddContent,
  DeleteContent,
  ReviseSentence,
  Proofread,
  ImproveNavigation,
  AddHyperlink,
};

const char* to_string(EditKind k);
EditKind edit_kind_from_string(const std::string& s);

struct Edit {
  std::string editor;
  EditKind kind = EditKind::AddContent;
  int scope = 1;        // 1 (minor) .. 5 (major)
  double effort = 1.0;  // recorded effort for this edit

  // Payload, by kind:
  std::vector<std::vector<std::string>> add_sentences;  // AddContent
  std::vector<SentenceId> delete_ids;                   // DeleteContent
  SentenceId target = 0;          // ReviseSentence / touch kinds (0 = none)
  std::vector<std::string> new_tokens;                  // ReviseSentence

  bool operator==(const Edit&) const = default;
};

struct OwnershipCensus {
  std::map<std::string, std::size_t> counts;  // contributor -> sentences owned
  std::uint64_t revision = 0;
};

// Fraction of `before` tokens that a revision deletes or substitutes:
// (|before| - LCS(before, after)) / |before|. Insertions alone score zero.
double changed_fraction(const std::vector<std::string>& before,
                        const std::vector<std::string>& after);

// Applies one edit and returns the updated page. A revision that changes
// strictly more than half of a sentence's tokens transfers its ownership to
// the editor; proofread/navigation/hyperlink edits never touch ownership.
// Throws std::invalid_argument on unknown sentence ids, empty payloads or
// scope outside 1..5.
WikiPage apply_edit(const WikiPage& page, const Edit& edit);

// Sentences owned per contributor; contributors owning nothing are omitted.
OwnershipCensus census(const WikiPage& page);

// Line-delimited history format, one edit per line:
//   revision<TAB>editor<TAB>kind<TAB>scope<TAB>effort<TAB>payload
// Round-trips bit-exactly (parse(serialize(h)) == h and
// serialize(parse(s)) == s).
std::string serialize_history(const std::vector<Edit>& history);
std::vector<Edit> parse_history(const std::string& text);

// Replays a history against an empty page.
WikiPage replay(const std::vector<Edit>& history);

}  // namespace wikigame::wiki
