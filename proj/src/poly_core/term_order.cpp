#include "affimg/term_order.hpp"

#include "affimg/errors.hpp"

namespace affimg {

namespace {

constexpr std::uint32_t kAll = ~std::uint32_t{0};

}  // namespace

TermOrder TermOrder::lex() {
  TermOrder o;
  o.blocks_.push_back({kAll, Kind::Lex, {}});
  return o;
}

TermOrder TermOrder::grevlex() {
  TermOrder o;
  o.blocks_.push_back({kAll, Kind::GRevLex, {}});
  return o;
}

TermOrder TermOrder::blockIndices(std::uint32_t frontMask, const TermOrder& back) {
  TermOrder o;
  o.blocks_.push_back({frontMask, Kind::GRevLex, {}});
  for (const Block& b : back.blocks_) {
    if (b.kind == Kind::Weight) {
      o.blocks_.push_back(b);
      continue;
    }
    std::uint32_t m = b.mask & ~frontMask;
    if (m) o.blocks_.push_back({m, b.kind, {}});
  }
  return o;
}

TermOrder TermOrder::weightedReverse(const RingContext& ring, std::size_t var) {
  TermOrder o;
  o.blocks_.push_back({kAll, Kind::Weight, ring.weights()});
  o.blocks_.push_back({1u << var, Kind::ReverseDegree, {}});
  o.blocks_.push_back({kAll & ~(1u << var), Kind::GRevLex, {}});
  return o;
}

TermOrder TermOrder::block(const RingContext& ring,
                           std::span<const std::string> front,
                           const TermOrder& back) {
  std::uint32_t mask = 0;
  for (const auto& name : front) mask |= 1u << ring.index(name);
  return blockIndices(mask, back);
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.arity();
  for (const Block& blk : blocks_) {
    const bool all = blk.mask == kAll;
    if (blk.kind == Kind::Weight) {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < n && i < blk.weights.size(); ++i) {
        wa += static_cast<long>(blk.weights[i]) * a[i];
        wb += static_cast<long>(blk.weights[i]) * b[i];
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      continue;
    }
    if (blk.kind == Kind::ReverseDegree) {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (blk.mask >> i & 1u) {
          da += a[i];
          db += b[i];
        }
      if (da != db) return da < db ? 1 : -1;
      continue;
    }
    if (blk.kind == Kind::Lex) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!all && !(blk.mask >> i & 1u)) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      continue;
    }
    unsigned da = 0, db = 0;
    if (all) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (blk.mask >> i & 1u) {
          da += a[i];
          db += b[i];
        }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
      if (!all && !(blk.mask >> i & 1u)) continue;
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
  }
  return 0;
}

std::string TermOrder::describe() const {
  std::string s;
  for (const Block& b : blocks_) {
    if (!s.empty()) s += " > ";
    switch (b.kind) {
      case Kind::Lex: s += "lex"; break;
      case Kind::GRevLex: s += "grevlex"; break;
      case Kind::Weight: {
        s += "weight(";
        for (std::size_t i = 0; i < b.weights.size(); ++i)
          s += (i ? "," : "") + std::to_string(b.weights[i]);
        s += ")";
        break;
      }
      case Kind::ReverseDegree: s += "revdeg"; break;
    }
    if (b.mask != kAll) {
      s += "{";
      bool first = true;
      for (unsigned i = 0; i < 32; ++i)
        if (b.mask >> i & 1u) {
          if (!first) s += ",";
          s += std::to_string(i);
          first = false;
        }
      s += "}";
    }
  }
  return s;
}

}  // namespace affimg
