#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affimg {

/// Ordered list of named variables with nonnegative integer weights.
///
/// Every polynomial carries the ring it lives in. Copies share storage, so
/// passing rings by value is cheap. Two rings are equal when their names and
/// weights agree position by position.
class RingContext {
 public:
  RingContext();
  explicit RingContext(std::vector<std::string> names,
                       std::vector<int> weights = {});

  std::size_t size() const noexcept { return data_->names.size(); }
  bool empty() const noexcept { return size() == 0; }

  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  int weight(std::size_t i) const { return data_->weights.at(i); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::vector<int>& weights() const noexcept { return data_->weights; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws DomainError for an unknown name.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  RingContext appended(std::span<const std::string> names,
                       std::span<const int> weights = {}) const;
  RingContext inserted(std::size_t position, const std::string& name,
                       int weight) const;
  RingContext without(std::span<const std::string> names) const;
  RingContext withWeights(std::vector<int> weights) const;

  /// A name starting with `_` (never produced by the expression grammar) that
  /// is not yet used in this ring.
  std::string freshName(std::string_view stem) const;

  friend bool operator==(const RingContext& a, const RingContext& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> weights;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace affimg
