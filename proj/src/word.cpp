#include "sadic/word.hpp"

#include <ostream>
#include <stdexcept>

#include "sadic/errors.hpp"

namespace sadic {

Word Word::from_digits(const std::string& digits) {
  std::vector<Sym> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("word: non-digit character in literal");
    symbols.push_back(c - '0');
  }
  return Word(std::move(symbols));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos)
    throw std::invalid_argument("word: factor range out of bounds");
  return Word(std::vector<Sym>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                               symbols_.begin() +
                                   static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Sym> out;
  out.reserve(size() + rhs.size());
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  out.insert(out.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return Word(std::move(out));
}

Word Word::repeat(std::size_t k) const {
  std::vector<Sym> out;
  out.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i)
    out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out));
}

void Word::append(const Word& w) {
  symbols_.insert(symbols_.end(), w.symbols_.begin(), w.symbols_.end());
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Sym a : symbols_) {
    if (a >= 0 && a < 10) {
      out.push_back(static_cast<char>('0' + a));
    } else {
      out += "[" + std::to_string(a) + "]";
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

Sym PowerWindow::at(std::int64_t i) const {
  if (base.empty()) throw std::invalid_argument("power window: empty base");
  std::int64_t n = static_cast<std::int64_t>(base.size());
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return base[static_cast<std::size_t>(r)];
}

Word PowerWindow::materialize(std::int64_t cap) const {
  if (hi < lo) throw std::invalid_argument("power window: hi < lo");
  if (hi - lo > cap)
    throw resource_error("power window: length " + std::to_string(hi - lo) +
                         " exceeds cap " + std::to_string(cap));
  std::vector<Sym> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t i = lo; i < hi; ++i) out.push_back(at(i));
  return Word(std::move(out));
}

}  // namespace sadic
