#include "oneq/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "oneq/errors.hpp"

namespace oneq {

namespace {

std::uint64_t low_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_arity(int n) {
  if (n < 1 || n > BitString::kMaxBits) {
    throw std::invalid_argument("arity must be in 1.." +
                                std::to_string(BitString::kMaxBits) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitString

BitString::BitString(int n, std::uint64_t value) : n_(n), value_(value) {
  check_arity(n);
  if ((value & ~low_mask(n)) != 0) {
    throw std::invalid_argument("bit string value does not fit in " +
                                std::to_string(n) + " bits");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
    throw std::invalid_argument("bit string must have 1.." +
                                std::to_string(kMaxBits) + " characters");
  }
  std::uint64_t v = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bit string contains '" + std::string(1, ch) + "'");
    }
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return BitString(static_cast<int>(text.size()), v);
}

bool BitString::bit(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("bit index out of range");
  if (i == 0) return false;
  return ((value_ >> (n_ - i)) & 1u) != 0;
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BitString& x) {
  return os << x.to_string();
}

SignVector sign_vector(const BitString& x) {
  SignVector s;
  s.signs.resize(static_cast<std::size_t>(x.size()) + 1);
  for (int i = 0; i <= x.size(); ++i) {
    s.signs[static_cast<std::size_t>(i)] = x.bit(i) ? -1 : 1;
  }
  return s;
}

int hamming_weight(const BitString& x) noexcept { return std::popcount(x.value()); }

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(int n, std::span<const int> members) : n_(n) {
  check_arity(n);
  for (int i : members) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n));
    }
    mask_ |= std::uint64_t{1} << (n - i);
  }
}

IndexSet IndexSet::from_mask(int n, std::uint64_t mask) {
  check_arity(n);
  if ((mask & ~low_mask(n)) != 0) throw std::invalid_argument("mask exceeds arity");
  IndexSet s;
  s.n_ = n;
  s.mask_ = mask;
  return s;
}

int IndexSet::size() const noexcept { return std::popcount(mask_); }

bool IndexSet::contains(int i) const noexcept {
  return i >= 1 && i <= n_ && ((mask_ >> (n_ - i)) & 1u) != 0;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

IndexSet differing_set(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw DimensionError("differing_set: lengths " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()));
  }
  return IndexSet::from_mask(x.size(), x.value() ^ y.value());
}

// ---------------------------------------------------------------------------
// PartialBooleanFunction

PartialBooleanFunction::PartialBooleanFunction(int n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {
  check_arity(n);
  if (entries_.empty()) throw std::invalid_argument("function has an empty domain");
  for (const auto& [x, v] : entries_) {
    if (x.size() != n) {
      throw std::invalid_argument("domain point " + x.to_string() +
                                  " has length " + std::to_string(x.size()) +
                                  ", expected " + std::to_string(n));
    }
  }
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first &&
        entries_[i].second != entries_[i - 1].second) {
      throw std::invalid_argument("domain point " + entries_[i].first.to_string() +
                                  " listed with both values");
    }
  }
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

std::optional<bool> PartialBooleanFunction::value(const BitString& x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, const BitString& key) { return e.first < key; });
  if (it == entries_.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::vector<BitString> PartialBooleanFunction::inputs_with(bool v) const {
  std::vector<BitString> out;
  for (const auto& [x, fx] : entries_) {
    if (fx == v) out.push_back(x);
  }
  return out;
}

bool PartialBooleanFunction::is_constant() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.second == entries_.front().second; });
}

PartialBooleanFunction complement(const PartialBooleanFunction& f) {
  std::vector<PartialBooleanFunction::Entry> flipped(f.entries().begin(), f.entries().end());
  for (auto& e : flipped) e.second = !e.second;
  return PartialBooleanFunction(f.arity(), std::move(flipped));
}

// ---------------------------------------------------------------------------
// Text format

PartialBooleanFunction parse_function(std::string_view text) {
  std::optional<int> header_n;
  std::optional<int> n;
  std::vector<PartialBooleanFunction::Entry> entries;
  std::unordered_map<std::uint64_t, bool> seen;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("n=")) {
      if (header_n || !entries.empty()) throw ParseError(line_no, "header must come first");
      int value = 0;
      const auto digits = line.substr(2);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1 ||
          value > BitString::kMaxBits) {
        throw ParseError(line_no, "bad header '" + std::string(line) + "'");
      }
      header_n = n = value;
      continue;
    }

    const auto space = line.find(' ');
    if (space == std::string_view::npos || space + 2 != line.size() ||
        (line.back() != '0' && line.back() != '1')) {
      throw ParseError(line_no, "expected '<bits> <0|1>', got '" + std::string(line) + "'");
    }
    const auto bits = line.substr(0, space);
    BitString x;
    try {
      x = BitString::parse(bits);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (!n) n = x.size();
    if (x.size() != *n) {
      throw ParseError(line_no, "inconsistent string lengths: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(*n));
    }
    const bool v = line.back() == '1';
    if (auto [it, fresh] = seen.emplace(x.value(), v); !fresh && it->second != v) {
      throw ParseError(line_no, "conflicting values for " + x.to_string());
    }
    entries.emplace_back(x, v);
  }
  if (entries.empty()) throw ParseError(0, "empty domain");
  return PartialBooleanFunction(*n, std::move(entries));
}

PartialBooleanFunction parse_function(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_function(std::string_view(text));
}

std::string serialize(const PartialBooleanFunction& f) {
  std::ostringstream out;
  out << "n=" << f.arity() << '\n';
  for (const auto& [x, v] : f.entries()) out << x << ' ' << (v ? '1' : '0') << '\n';
  return out.str();
}

}  // namespace oneq
