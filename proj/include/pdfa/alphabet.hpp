#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdfa {

using SymbolIndex = std::size_t;

// Ordered set of single-character symbols. The order fixes traversal and
// serialization order everywhere.
class Alphabet {
 public:
  Alphabet() = default;

  // Throws InputError on an empty list or a repeated symbol.
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  char operator[](SymbolIndex i) const { return symbols_[i]; }
  const std::string& symbols() const noexcept { return symbols_; }

  std::optional<SymbolIndex> index_of(char symbol) const noexcept;
  bool contains(char symbol) const noexcept { return index_of(symbol).has_value(); }

  // Like index_of, but throws InputError for a foreign symbol.
  SymbolIndex require(char symbol) const;

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

}  // namespace pdfa
