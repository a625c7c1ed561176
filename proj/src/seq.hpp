#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wkl {

// Entry alphabets. Binary and ternary restrict entries to {0,1} / {0,1,2};
// nat trees carry arbitrary naturals (finitely branching at desk scale).
enum class Alphabet {
  kBinary,
  kTernary,
  kNat,
};

// Exclusive symbol bound, or nullopt for nat.
std::optional<uint32_t> symbol_bound(Alphabet a);

std::string alphabet_name(Alphabet a);
std::optional<Alphabet> alphabet_from_name(const std::string& name);

// A finite sequence of naturals. The empty sequence is the tree root.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<uint32_t> entries) : entries_(std::move(entries)) {}

  size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  uint32_t at(size_t i) const { return entries_[i]; }
  uint32_t back() const { return entries_.back(); }
  const std::vector<uint32_t>& entries() const { return entries_; }

  Seq extended(uint32_t symbol) const;
  Seq prefix(size_t len) const;
  Seq parent() const;  // requires !empty()

  bool is_prefix_of(const Seq& other) const;

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<uint32_t> entries_;
};

// True when one extends the other (or equal).
bool comparable(const Seq& a, const Seq& b);

// Canonical order: shorter first, then pointwise. This is the tie-break
// order used everywhere a single representative must be chosen.
bool shortlex_less(const Seq& a, const Seq& b);

// Pointwise dictionary order (prefix precedes extension). Within a single
// level set this coincides with "left-most".
bool pointwise_less(const Seq& a, const Seq& b);

struct ShortlexLess {
  bool operator()(const Seq& a, const Seq& b) const {
    return shortlex_less(a, b);
  }
};

// Compact rendering used in reports and on the command line: `-` for the
// root, digit strings for binary/ternary, dot-separated entries for nat.
std::string render_seq(const Seq& s, Alphabet a);
Seq parse_seq(const std::string& text, Alphabet a);

}  // namespace wkl
