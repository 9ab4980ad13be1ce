#include "seaweed/core.hpp"

#include <charconv>
#include <numeric>

namespace seaweed {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
bool parse_integer(std::string_view token, T& out) {
  if (token.empty()) return false;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

// --- Composition -----------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw DomainError("composition part must be positive, got " + std::to_string(p));
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::reversed() const {
  return Composition({parts_.rbegin(), parts_.rend()});
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition parse_composition(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw ParseError("empty composition");
  std::vector<int> parts;
  for (auto raw : split(body, '|')) {
    const auto token = trim(raw);
    int value = 0;
    if (!parse_integer(token, value)) {
      throw ParseError("invalid composition part '" + std::string(token) + "'");
    }
    if (value < 1) {
      throw ParseError("composition part must be positive: '" + std::string(token) + "'");
    }
    parts.push_back(value);
  }
  return Composition(std::move(parts));
}

Composition composition_from_cut_mask(int n, std::uint64_t mask) {
  std::vector<int> parts;
  int run = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (mask >> i & 1U) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw DomainError("compositions_of requires n >= 1, got " + std::to_string(n));
  if (n > 63) throw DomainError("compositions_of supports n <= 63");
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::vector<Composition> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    out.push_back(composition_from_cut_mask(n, mask));
  }
  return out;
}

// --- SeaweedSpec -----------------------------------------------------------

SeaweedSpec::SeaweedSpec(Composition top, Composition bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.n() != bottom_.n()) {
    throw DomainError("top sums to " + std::to_string(top_.n()) + " but bottom sums to " +
                      std::to_string(bottom_.n()));
  }
}

SeaweedSpec SeaweedSpec::swapped() const { return SeaweedSpec(bottom_, top_); }

SeaweedSpec SeaweedSpec::reversed() const {
  return SeaweedSpec(top_.reversed(), bottom_.reversed());
}

std::string SeaweedSpec::to_string() const {
  return top_.to_string() + " / " + bottom_.to_string();
}

SeaweedSpec parse_seaweed(std::string_view text) {
  const auto body = trim(text);
  const auto sides = split(body, '/');
  if (sides.size() != 2) {
    throw ParseError("expected '<top> / <bottom>', got '" + std::string(body) + "'");
  }
  auto top = parse_composition(sides[0]);
  auto bottom = parse_composition(sides[1]);
  if (top.n() != bottom.n()) {
    throw ParseError("sum mismatch: top sums to " + std::to_string(top.n()) +
                     ", bottom sums to " + std::to_string(bottom.n()));
  }
  return SeaweedSpec(std::move(top), std::move(bottom));
}

// --- IntegerMultiset -------------------------------------------------------

IntegerMultiset::IntegerMultiset(std::initializer_list<std::pair<const Value, Count>> init) {
  for (const auto& [value, count] : init) add(value, count);
}

void IntegerMultiset::add(Value value, Count times) {
  if (times < 0) throw DomainError("negative multiplicity");
  if (times == 0) return;
  counts_[value] += times;
  size_ += times;
}

void IntegerMultiset::remove(Value value, Count times) {
  auto it = counts_.find(value);
  if (it == counts_.end() || it->second < times) {
    throw DomainError("cannot remove " + std::to_string(times) + " copies of " +
                      std::to_string(value));
  }
  it->second -= times;
  size_ -= times;
  if (it->second == 0) counts_.erase(it);
}

void IntegerMultiset::merge(const IntegerMultiset& other) {
  for (const auto& [value, count] : other.counts_) add(value, count);
}

IntegerMultiset::Count IntegerMultiset::count(Value value) const {
  const auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<IntegerMultiset::Count> IntegerMultiset::multiplicities() const {
  std::vector<Count> out;
  out.reserve(counts_.size());
  for (const auto& [value, count] : counts_) out.push_back(count);
  return out;
}

std::vector<IntegerMultiset::Value> IntegerMultiset::values() const {
  std::vector<Value> out;
  out.reserve(counts_.size());
  for (const auto& [value, count] : counts_) out.push_back(value);
  return out;
}

bool IntegerMultiset::is_submultiset_of(const IntegerMultiset& other) const {
  for (const auto& [value, count] : counts_) {
    if (other.count(value) < count) return false;
  }
  return true;
}

std::string IntegerMultiset::to_exponent_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [value, count] : counts_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(value);
    if (count != 1) out += "^" + std::to_string(count);
  }
  out += "}";
  return out;
}

bool multiset_equal(const IntegerMultiset& x, const IntegerMultiset& y) { return x == y; }

IntegerMultiset parse_exponent_multiset(std::string_view text) {
  auto body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw ParseError("multiset must be enclosed in braces: '" + std::string(body) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  IntegerMultiset out;
  if (body.empty()) return out;
  for (auto raw : split(body, ',')) {
    const auto item = trim(raw);
    const auto caret = item.find('^');
    int value = 0;
    IntegerMultiset::Count count = 1;
    const auto value_text = trim(item.substr(0, caret));
    if (!parse_integer(value_text, value)) {
      throw ParseError("invalid multiset value '" + std::string(value_text) + "'");
    }
    if (caret != std::string_view::npos) {
      const auto count_text = trim(item.substr(caret + 1));
      if (!parse_integer(count_text, count) || count < 1) {
        throw ParseError("invalid multiplicity '" + std::string(count_text) + "'");
      }
    }
    out.add(value, count);
  }
  return out;
}

nlohmann::ordered_json to_json(const IntegerMultiset& s) {
  auto j = nlohmann::ordered_json::object();
  for (const auto& [value, count] : s.counts()) j[std::to_string(value)] = count;
  return j;
}

IntegerMultiset multiset_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("multiset JSON must be an object");
  IntegerMultiset out;
  for (const auto& [key, count] : j.items()) {
    int value = 0;
    if (!parse_integer(std::string_view(key), value)) {
      throw ParseError("invalid multiset key '" + key + "'");
    }
    if (!count.is_number_integer() || count.get<std::int64_t>() < 1) {
      throw ParseError("invalid multiplicity for key '" + key + "'");
    }
    out.add(value, count.get<std::int64_t>());
  }
  return out;
}

}  // namespace seaweed
