#include "pdfa/alphabet.hpp"

#include <algorithm>

#include "pdfa/error.hpp"

namespace pdfa {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
      throw InputError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
  }
}

std::optional<SymbolIndex> Alphabet::index_of(char symbol) const noexcept {
  auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

SymbolIndex Alphabet::require(char symbol) const {
  if (auto i = index_of(symbol)) return *i;
  throw InputError(std::string("symbol '") + symbol + "' is not in alphabet {" + symbols_ + "}");
}

}  // namespace pdfa
