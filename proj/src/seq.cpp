#include "seq.hpp"

#include <algorithm>

#include "error.hpp"

namespace wkl {

std::optional<uint32_t> symbol_bound(Alphabet a) {
  switch (a) {
    case Alphabet::kBinary:
      return 2;
    case Alphabet::kTernary:
      return 3;
    case Alphabet::kNat:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::kBinary:
      return "binary";
    case Alphabet::kTernary:
      return "ternary";
    case Alphabet::kNat:
      return "nat";
  }
  return "nat";
}

std::optional<Alphabet> alphabet_from_name(const std::string& name) {
  if (name == "binary") return Alphabet::kBinary;
  if (name == "ternary") return Alphabet::kTernary;
  if (name == "nat") return Alphabet::kNat;
  return std::nullopt;
}

Seq Seq::extended(uint32_t symbol) const {
  std::vector<uint32_t> e = entries_;
  e.push_back(symbol);
  return Seq(std::move(e));
}

Seq Seq::prefix(size_t len) const {
  return Seq(std::vector<uint32_t>(entries_.begin(), entries_.begin() + len));
}

Seq Seq::parent() const { return prefix(entries_.size() - 1); }

bool Seq::is_prefix_of(const Seq& other) const {
  if (length() > other.length()) return false;
  return std::equal(entries_.begin(), entries_.end(),
                    other.entries_.begin());
}

bool comparable(const Seq& a, const Seq& b) {
  return a.is_prefix_of(b) || b.is_prefix_of(a);
}

bool shortlex_less(const Seq& a, const Seq& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                      b.entries().begin(), b.entries().end());
}

bool pointwise_less(const Seq& a, const Seq& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                      b.entries().begin(), b.entries().end());
}

std::string render_seq(const Seq& s, Alphabet a) {
  if (s.empty()) return "-";
  std::string out;
  bool dotted = (a == Alphabet::kNat);
  for (size_t i = 0; i < s.length(); ++i) {
    if (dotted) {
      if (i > 0) out += '.';
      out += std::to_string(s.at(i));
    } else {
      out += static_cast<char>('0' + s.at(i));
    }
  }
  return out;
}

Seq parse_seq(const std::string& text, Alphabet a) {
  if (text == "-") return Seq();
  if (text.empty()) fail(ErrorKind::kParse, "bad-node: empty");
  std::vector<uint32_t> entries;
  if (a == Alphabet::kNat) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t dot = text.find('.', pos);
      std::string tok = text.substr(pos, dot == std::string::npos
                                             ? std::string::npos
                                             : dot - pos);
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos) {
        fail(ErrorKind::kParse, "bad-node: " + text);
      }
      entries.push_back(static_cast<uint32_t>(std::stoul(tok)));
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
  } else {
    uint32_t bound = *symbol_bound(a);
    for (char ch : text) {
      if (ch < '0' || ch > '9') fail(ErrorKind::kParse, "bad-node: " + text);
      uint32_t v = static_cast<uint32_t>(ch - '0');
      if (v >= bound) {
        fail(ErrorKind::kParse,
             "bad-node: entry " + std::to_string(v) + " outside " +
                 alphabet_name(a) + " alphabet in " + text);
      }
      entries.push_back(v);
    }
  }
  return Seq(std::move(entries));
}

}  // namespace wkl
