#include "cliquedim/concept_class.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cliquedim/error.hpp"

namespace cliquedim {

namespace {

std::uint64_t universe_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_universe(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_params, "universe must contain at least one point");
  if (n > kMaxUniverse) {
    throw Error(ErrorKind::invalid_params,
                "universe of " + std::to_string(n) + " points exceeds " + std::to_string(kMaxUniverse));
  }
}

}  // namespace

HypothesisPattern::HypothesisPattern(std::size_t universe_size, std::uint64_t bits)
    : size_(universe_size), bits_(bits & universe_mask(universe_size)) {
  if (universe_size > kMaxUniverse) {
    throw Error(ErrorKind::invalid_params, "pattern longer than " + std::to_string(kMaxUniverse));
  }
}

HypothesisPattern HypothesisPattern::from_string(std::string_view text) {
  if (text.size() > kMaxUniverse) {
    throw Error(ErrorKind::parse_error, "pattern longer than " + std::to_string(kMaxUniverse));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw Error(ErrorKind::parse_error, "pattern character '" + std::string(1, text[i]) + "'");
    }
  }
  return HypothesisPattern(text.size(), bits);
}

std::string HypothesisPattern::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((bits_ >> i) & 1U) s[i] = '1';
  }
  return s;
}

std::strong_ordering HypothesisPattern::operator<=>(const HypothesisPattern& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  std::uint64_t diff = bits_ ^ other.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  int first = std::countr_zero(diff);
  return ((bits_ >> first) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::optional<Dataset> Dataset::try_make(std::vector<LabeledExample> examples) {
  std::sort(examples.begin(), examples.end());
  Dataset d;
  for (const auto& e : examples) {
    if (e.label > 1) return std::nullopt;
    if (e.point.id >= kMaxUniverse) return std::nullopt;
    std::uint64_t bit = std::uint64_t{1} << e.point.id;
    if ((d.care_ & bit) && (((d.value_ & bit) != 0) != (e.label == 1))) return std::nullopt;
    d.care_ |= bit;
    if (e.label) d.value_ |= bit;
  }
  d.examples_ = std::move(examples);
  return d;
}

Dataset::Dataset(std::vector<LabeledExample> examples) {
  auto d = try_make(std::move(examples));
  if (!d) throw Error(ErrorKind::invalid_params, "dataset labels some point both 0 and 1 (or has a bad label)");
  *this = std::move(*d);
}

bool Dataset::contains(LabeledExample e) const noexcept {
  return std::binary_search(examples_.begin(), examples_.end(), e);
}

std::size_t Dataset::count(LabeledExample e) const noexcept {
  auto [lo, hi] = std::equal_range(examples_.begin(), examples_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::optional<Point> Dataset::first_contradiction(const Dataset& other) const noexcept {
  std::uint64_t diff = (value_ ^ other.value_) & care_ & other.care_;
  if (diff == 0) return std::nullopt;
  return Point{static_cast<std::uint32_t>(std::countr_zero(diff))};
}

std::string Dataset::render() const {
  if (examples_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    if (i) s += ';';
    s += '(' + std::to_string(examples_[i].point.id) + ':' + std::to_string(examples_[i].label) + ')';
  }
  return s;
}

ConceptClass::ConceptClass(std::size_t universe_size, std::vector<HypothesisPattern> rows)
    : universe_size_(universe_size), rows_(std::move(rows)) {
  check_universe(universe_size_);
  if (rows_.empty()) throw Error(ErrorKind::invalid_params, "a concept class needs at least one hypothesis");
  for (const auto& r : rows_) {
    if (r.size() != universe_size_) {
      throw Error(ErrorKind::invalid_params, "row '" + r.to_string() + "' does not have " +
                                                 std::to_string(universe_size_) + " points");
    }
  }
  std::sort(rows_.begin(), rows_.end());
  auto dup = std::adjacent_find(rows_.begin(), rows_.end());
  if (dup != rows_.end()) throw Error(ErrorKind::invalid_params, "duplicate row '" + dup->to_string() + "'");
}

ConceptClass ConceptClass::empty(std::size_t universe_size) {
  check_universe(universe_size);
  ConceptClass c;
  c.universe_size_ = universe_size;
  return c;
}

std::string ConceptClass::key() const {
  std::string k = std::to_string(universe_size_) + ":";
  for (const auto& r : rows_) k += r.to_string();
  return k;
}

ConceptClass restrict(const ConceptClass& cls, Point point, int label) {
  if (point.id >= cls.universe_size()) {
    throw Error(ErrorKind::index_out_of_range, "point " + std::to_string(point.id) + " outside universe");
  }
  std::vector<HypothesisPattern> kept;
  for (const auto& r : cls.rows()) {
    if (r.at(point) == label) kept.push_back(r);
  }
  if (kept.empty()) return ConceptClass::empty(cls.universe_size());
  return ConceptClass(cls.universe_size(), std::move(kept));
}

bool is_consistent(const HypothesisPattern& h, const Dataset& dataset) noexcept {
  return ((h.bits() ^ dataset.value_mask()) & dataset.care_mask()) == 0;
}

void check_points(const ConceptClass& cls, const Dataset& dataset) {
  if (dataset.care_mask() & ~universe_mask(cls.universe_size())) {
    throw Error(ErrorKind::index_out_of_range, "dataset " + dataset.render() + " uses a point outside the universe");
  }
}

bool is_realizable(const ConceptClass& cls, const Dataset& dataset) {
  check_points(cls, dataset);
  return std::any_of(cls.rows().begin(), cls.rows().end(),
                     [&](const HypothesisPattern& h) { return is_consistent(h, dataset); });
}

std::string write_class(const ConceptClass& cls) {
  std::ostringstream out;
  out << "points " << cls.universe_size() << "\n";
  out << "hypotheses " << cls.size() << "\n";
  for (const auto& r : cls.rows()) out << r.to_string() << "\n";
  return out.str();
}

ConceptClass parse_class(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> content;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    line = line.substr(start, end - start + 1);
    if (line[0] == '#') continue;
    content.push_back(line);
  }
  auto header = [&](std::size_t idx, std::string_view word) -> std::size_t {
    if (idx >= content.size()) throw Error(ErrorKind::parse_error, "missing '" + std::string(word) + "' line");
    std::istringstream ls(content[idx]);
    std::string w;
    long long v = -1;
    std::string rest;
    if (!(ls >> w >> v) || w != word || v < 0 || (ls >> rest)) {
      throw Error(ErrorKind::parse_error, "expected '" + std::string(word) + " <count>', got '" + content[idx] + "'");
    }
    return static_cast<std::size_t>(v);
  };
  std::size_t n = header(0, "points");
  std::size_t k = header(1, "hypotheses");
  if (content.size() != 2 + k) {
    throw Error(ErrorKind::parse_error, "expected " + std::to_string(k) + " hypothesis rows, found " +
                                            std::to_string(content.size() - 2));
  }
  std::vector<HypothesisPattern> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = content[2 + i];
    if (row.size() != n) {
      throw Error(ErrorKind::parse_error, "row '" + row + "' does not have " + std::to_string(n) + " characters");
    }
    rows.push_back(HypothesisPattern::from_string(row));
  }
  try {
    return ConceptClass(n, std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

}  // namespace cliquedim
