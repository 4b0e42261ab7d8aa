#include "affimg/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "affimg/errors.hpp"
#include "affimg/monomial.hpp"

namespace affimg {


RingContext::RingContext() : data_(std::make_shared<const Data>()) {}

RingContext::RingContext(std::vector<std::string> names,
                         std::vector<int> weights) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size())
    throw DomainError("ring: one weight per variable required");
  if (names.size() > kMaxVariables)
    throw DomainError("ring: at most " + std::to_string(kMaxVariables) +
                      " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("ring: empty variable name");
    if (!seen.insert(n).second)
      throw DomainError("ring: duplicate variable name '" + n + "'");
  }
  for (int w : weights)
    if (w < 0) throw DomainError("ring: weights must be nonnegative");
  data_ = std::make_shared<const Data>(Data{std::move(names), std::move(weights)});
}

std::optional<std::size_t> RingContext::find(std::string_view name) const {
  const auto& names = data_->names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::size_t RingContext::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

RingContext RingContext::appended(std::span<const std::string> names,
                                  std::span<const int> weights) const {
  auto n = data_->names;
  auto w = data_->weights;
  for (std::size_t i = 0; i < names.size(); ++i) {
    n.push_back(names[i]);
    w.push_back(weights.empty() ? 1 : weights[i]);
  }
  return RingContext(std::move(n), std::move(w));
}

RingContext RingContext::inserted(std::size_t position, const std::string& name,
                                  int weight) const {
  auto n = data_->names;
  auto w = data_->weights;
  if (position > n.size()) throw DomainError("ring: insertion past the end");
  n.insert(n.begin() + static_cast<std::ptrdiff_t>(position), name);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(position), weight);
  return RingContext(std::move(n), std::move(w));
}

RingContext RingContext::without(std::span<const std::string> names) const {
  std::vector<std::string> n;
  std::vector<int> w;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::find(names.begin(), names.end(), data_->names[i]) != names.end())
      continue;
    n.push_back(data_->names[i]);
    w.push_back(data_->weights[i]);
  }
  return RingContext(std::move(n), std::move(w));
}

RingContext RingContext::withWeights(std::vector<int> weights) const {
  return RingContext(data_->names, std::move(weights));
}

std::string RingContext::freshName(std::string_view stem) const {
  std::string base = "_" + std::string(stem);
  if (!contains(base)) return base;
  for (unsigned k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!contains(candidate)) return candidate;
  }
}

bool operator==(const RingContext& a, const RingContext& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->names == b.data_->names && a.data_->weights == b.data_->weights;
}

}  // namespace affimg
