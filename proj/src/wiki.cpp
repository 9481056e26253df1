#include "wikigame/wiki.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wikigame::wiki {

const char* to_string(EditKind k) {
  switch (k) {
    case EditKind::AddContent: return "add_content";
    case EditKind::DeleteContent: return "delete_content";
    case EditKind::ReviseSentence: return "revise_sentence";
    case EditKind::Proofread: return "proofread";
    case EditKind::ImproveNavigation: return "improve_navigation";
    case EditKind::AddHyperlink: return "add_hyperlink";
  }
  return "unknown";
}

EditKind edit_kind_from_string(const std::string& s) {
  if (s == "add_content") return EditKind::AddContent;
  if (s == "delete_content") return EditKind::DeleteContent;
  if (s == "revise_sentence") return EditKind::ReviseSentence;
  if (s == "proofread") return EditKind::Proofread;
  if (s == "improve_navigation") return EditKind::ImproveNavigation;
  if (s == "add_hyperlink") return EditKind::AddHyperlink;
  throw std::invalid_argument("unknown edit kind: " + s);
}

double changed_fraction(const std::vector<std::string>& before,
                        const std::vector<std::string>& after) {
  if (before.empty()) {
    throw std::invalid_argument("changed_fraction needs a non-empty pre-edit sentence");
  }
  // Longest common subsequence; anything in `before` not retained counts as
  // deleted or substituted.
  const std::size_t n = before.size(), m = after.size();
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = before[i - 1] == after[j - 1] ? prev[j - 1] + 1
                                             : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const std::size_t kept = prev[m];
  return static_cast<double>(n - kept) / static_cast<double>(n);
}

namespace {

std::vector<Sentence>::iterator find_sentence(WikiPage& page, SentenceId id) {
  auto it = std::find_if(page.sentences.begin(), page.sentences.end(),
                         [id](const Sentence& s) { return s.id == id; });
  if (it == page.sentences.end()) {
    throw std::invalid_argument("unknown sentence id: " + std::to_string(id));
  }
  return it;
}

}  // namespace

WikiPage apply_edit(const WikiPage& page, const Edit& edit) {
  if (edit.scope < 1 || edit.scope > 5) {
    throw std::invalid_argument("edit scope must be in 1..5");
  }
  WikiPage next = page;
  switch (edit.kind) {
    case EditKind::AddContent: {
      if (edit.add_sentences.empty()) {
        throw std::invalid_argument("add_content edit with empty payload");
      }
      for (const auto& tokens : edit.add_sentences) {
        if (tokens.empty()) {
          throw std::invalid_argument("cannot add an empty sentence");
        }
        next.sentences.push_back(Sentence{next.next_id++, edit.editor, tokens});
      }
      break;
    }
    case EditKind::DeleteContent: {
      if (edit.delete_ids.empty()) {
        throw std::invalid_argument("delete_content edit with empty payload");
      }
      for (SentenceId id : edit.delete_ids) {
        next.sentences.erase(find_sentence(next, id));
      }
      break;
    }
    case EditKind::ReviseSentence: {
      if (edit.new_tokens.empty()) {
        throw std::invalid_argument("revised sentence cannot be empty");
      }
      auto it = find_sentence(next, edit.target);
      // Strictly more than half the tokens deleted or substituted transfers
      // ownership to the editor.
      if (changed_fraction(it->tokens, edit.new_tokens) > 0.5) {
        it->owner = edit.editor;
      }
      it->tokens = edit.new_tokens;
      break;
    }
    case EditKind::Proofread:
    case EditKind::ImproveNavigation:
    case EditKind::AddHyperlink: {
      if (edit.target != 0) {
        find_sentence(next, edit.target);  // existence check only
      }
      break;
    }
  }
  next.revision = page.revision + 1;
  return next;
}

OwnershipCensus census(const WikiPage& page) {
  OwnershipCensus out;
  out.revision = page.revision;
  for (const Sentence& s : page.sentences) {
    ++out.counts[s.owner];
  }
  return out;
}

WikiPage replay(const std::vector<Edit>& history) {
  WikiPage page;
  for (const Edit& edit : history) {
    page = apply_edit(page, edit);
  }
  return page;
}

namespace {

void check_token(const std::string& tok) {
  if (tok.empty() || tok.find_first_of(" \t\n|:,") != std::string::npos) {
    throw std::invalid_argument("token contains reserved characters: " + tok);
  }
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    check_token(tokens[i]);
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string format_effort(double effort) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", effort);
  return buf;
}

}  // namespace

std::string serialize_history(const std::vector<Edit>& history) {
  std::string out;
  std::uint64_t revision = 0;
  for (const Edit& edit : history) {
    out += std::to_string(++revision);
    out += '\t';
    out += edit.editor;
    out += '\t';
    out += to_string(edit.kind);
    out += '\t';
    out += std::to_string(edit.scope);
    out += '\t';
    out += format_effort(edit.effort);
    out += '\t';
    switch (edit.kind) {
      case EditKind::AddContent: {
        for (std::size_t i = 0; i < edit.add_sentences.size(); ++i) {
          if (i) out += '|';
          out += join_tokens(edit.add_sentences[i]);
        }
        break;
      }
      case EditKind::DeleteContent: {
        for (std::size_t i = 0; i < edit.delete_ids.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(edit.delete_ids[i]);
        }
        break;
      }
      case EditKind::ReviseSentence: {
        out += std::to_string(edit.target);
        out += ':';
        out += join_tokens(edit.new_tokens);
        break;
      }
      default: {
        if (edit.target != 0) out += std::to_string(edit.target);
        break;
      }
    }
    out += '\n';
  }
  return out;
}

std::vector<Edit> parse_history(const std::string& text) {
  std::vector<Edit> history;
  std::istringstream in(text);
  std::string line;
  std::uint64_t expected_revision = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 6) {
      throw std::invalid_argument("malformed history line: " + line);
    }
    ++expected_revision;
    if (std::stoull(fields[0]) != expected_revision) {
      throw std::invalid_argument("history revisions out of sequence at line: " + line);
    }
    Edit edit;
    edit.editor = fields[1];
    edit.kind = edit_kind_from_string(fields[2]);
    edit.scope = std::stoi(fields[3]);
    edit.effort = std::strtod(fields[4].c_str(), nullptr);
    const std::string& payload = fields[5];
    switch (edit.kind) {
      case EditKind::AddContent: {
        for (const std::string& sentence : split(payload, '|')) {
          edit.add_sentences.push_back(split(sentence, ' '));
        }
        break;
      }
      case EditKind::DeleteContent: {
        for (const std::string& id : split(payload, ',')) {
          edit.delete_ids.push_back(std::stoull(id));
        }
        break;
      }
      case EditKind::ReviseSentence: {
        const auto colon = payload.find(':');
        if (colon == std::string::npos) {
          throw std::invalid_argument("malformed revise payload: " + payload);
        }
        edit.target = std::stoull(payload.substr(0, colon));
        edit.new_tokens = split(payload.substr(colon + 1), ' ');
        break;
      }
      default: {
        if (!payload.empty()) edit.target = std::stoull(payload);
        break;
      }
    }
    history.push_back(std::move(edit));
  }
  return history;
}

}  // namespace wikigame::wiki
