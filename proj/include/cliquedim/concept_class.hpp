#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliquedim {

/// Points are packed into 64-bit words throughout, which caps |X|.
inline constexpr std::size_t kMaxUniverse = 64;

struct Point {
  std::uint32_t id = 0;

  auto operator<=>(const Point&) const = default;
};

struct LabeledExample {
  Point point;
  std::uint8_t label = 0;

  auto operator<=>(const LabeledExample&) const = default;
};

/// A full labeling of the point universe; not necessarily a member of any class.
class HypothesisPattern {
 public:
  HypothesisPattern() = default;
  HypothesisPattern(std::size_t universe_size, std::uint64_t bits);

  /// Parses a string of '0'/'1', point 0 first.
  static HypothesisPattern from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int at(Point p) const noexcept { return static_cast<int>((bits_ >> p.id) & 1U); }
  std::string to_string() const;

  bool operator==(const HypothesisPattern&) const = default;
  /// Lexicographic on the label sequence, point 0 most significant.
  std::strong_ordering operator<=>(const HypothesisPattern& other) const;

 private:
  std::size_t size_ = 0;
  std::uint64_t bits_ = 0;
};

/// Canonical multiset of labeled examples: sorted by (point, label), with
/// multiplicity. A point never carries both labels.
class Dataset {
 public:
  Dataset() = default;
  /// Throws Error(invalid_params) if some point appears with both labels.
  explicit Dataset(std::vector<LabeledExample> examples);

  /// Returns nullopt instead of throwing for contradictory input.
  static std::optional<Dataset> try_make(std::vector<LabeledExample> examples);

  std::span<const LabeledExample> examples() const noexcept { return examples_; }
  std::size_t size() const noexcept { return examples_.size(); }
  bool empty() const noexcept { return examples_.empty(); }

  /// Bit x set iff point x occurs; value bit x holds its label.
  std::uint64_t care_mask() const noexcept { return care_; }
  std::uint64_t value_mask() const noexcept { return value_; }

  bool contains(LabeledExample e) const noexcept;
  std::size_t count(LabeledExample e) const noexcept;

  /// True iff some x has (x,0) in one dataset and (x,1) in the other.
  bool contradicts(const Dataset& other) const noexcept {
    return ((value_ ^ other.value_) & care_ & other.care_) != 0;
  }
  /// Smallest contradicting point, if any.
  std::optional<Point> first_contradiction(const Dataset& other) const noexcept;

  /// "(p:l);(p:l)" rendering; empty dataset renders as "()".
  std::string render() const;

  bool operator==(const Dataset& other) const { return examples_ == other.examples_; }
  std::strong_ordering operator<=>(const Dataset& other) const {
    return examples_ <=> other.examples_;
  }

 private:
  std::vector<LabeledExample> examples_;
  std::uint64_t care_ = 0;
  std::uint64_t value_ = 0;
};

/// Finite concept class H over points {0..n-1}. Rows are distinct and kept in
/// lexicographic order, so equal classes compare equal and share a key.
/// An empty class only arises from restriction.
class ConceptClass {
 public:
  /// Throws Error(invalid_params) on empty input, wrong row length or duplicates.
  ConceptClass(std::size_t universe_size, std::vector<HypothesisPattern> rows);

  static ConceptClass empty(std::size_t universe_size);

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::span<const HypothesisPattern> rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool is_empty() const noexcept { return rows_.empty(); }

  /// Canonical identity key (concatenated rows).
  std::string key() const;

  bool operator==(const ConceptClass&) const = default;

 private:
  ConceptClass() = default;
  std::size_t universe_size_ = 0;
  std::vector<HypothesisPattern> rows_;
};

/// Subclass {h : h(point) = label}; possibly empty.
ConceptClass restrict(const ConceptClass& cls, Point point, int label);

bool is_consistent(const HypothesisPattern& h, const Dataset& dataset) noexcept;
bool is_realizable(const ConceptClass& cls, const Dataset& dataset);

/// Throws Error(index_out_of_range) if a dataset point is outside the universe.
void check_points(const ConceptClass& cls, const Dataset& dataset);

/// Text format: `points <n>`, `hypotheses <k>`, then k rows of '0'/'1'.
/// Lines starting with '#' are comments. Output rows are canonical.
std::string write_class(const ConceptClass& cls);
ConceptClass parse_class(std::string_view text);

}  // namespace cliquedim
