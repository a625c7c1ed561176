#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seq.hpp"

namespace wkl {

// Structured-text report: one `key value...` line per entry, emitted in
// insertion order so identical runs produce identical bytes.
class Report {
 public:
  void add(std::string_view key, std::string_view value);
  void add_num(std::string_view key, uint64_t value);
  void add_seq(std::string_view key, const Seq& s, Alphabet a);
  void add_seqs(std::string_view key, const std::vector<Seq>& seqs,
                Alphabet a);
  void add_nums(std::string_view key, const std::vector<uint32_t>& values);

  const std::vector<std::pair<std::string, std::string>>& lines() const {
    return lines_;
  }

  std::string text() const;

  static Report parse(const std::string& text);

  std::optional<std::string> first(std::string_view key) const;
  std::vector<std::string> all(std::string_view key) const;

  // Typed accessors for required keys; missing or malformed keys raise
  // parse errors naming the key.
  std::string need(std::string_view key) const;
  uint64_t need_num(std::string_view key) const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::vector<std::string> split_fields(const std::string& value);

}  // namespace wkl
