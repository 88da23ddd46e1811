// Brute-force ground truth on small finite groups SL_n(F_p): enumeration,
// conjugacy classes, exact word-norm tables and the invariants Delta_k,
// Delta.
//
// The word norm with respect to S depends only on the union of the
// conjugacy classes of S and S^-1, so for a finite group every
// normal-generation question reduces to subsets of the class set.  Class
// sets are given as sorted lists of class indices.
//
// These computations are consistency checks over finite fields.  They say
// nothing about the infinite-field bounds the factorisation engine is
// modelled on.

#ifndef NORMGEN_ORACLE_HPP_
#define NORMGEN_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "rootdata.hpp"

namespace normgen::oracle {

  struct Caps {
    std::size_t max_elements = 1'000'000;
    std::size_t max_subsets  = std::size_t(1) << 20;
  };

  using ClassSet = std::vector<std::size_t>;

  //! |SL_n(F_p)| = p^{n(n-1)/2} prod_{i=2}^n (p^i - 1), or nullopt past
  //! 2^64.
  [[nodiscard]] inline std::optional<std::uint64_t>
  sl_order(std::size_t n, std::uint64_t p) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) {
      if (__builtin_mul_overflow(order, p, &order)) {
        return std::nullopt;
      }
    }
    std::uint64_t pi = p;
    for (std::size_t i = 2; i <= n; ++i) {
      if (__builtin_mul_overflow(pi, p, &pi)
          || __builtin_mul_overflow(order, pi - 1, &order)) {
        return std::nullopt;
      }
    }
    return order;
  }

  //! Complete enumeration of SL_n(F_p) with inverses and conjugacy classes.
  //! Elements are stored as packed residues and keyed by their base-p
  //! row-major encoding.
  class GroupTable {
   public:
    GroupTable(std::size_t n, std::uint64_t p, Caps const& caps = {})
        : _field(p), _n(n) {
      if (n < 2) {
        throw invalid_input("SL_n requires n >= 2");
      }
      auto const order = sl_order(n, p);
      if (!order || *order > caps.max_elements) {
        throw cap_exceeded("|SL_" + std::to_string(n) + "(F_"
                           + std::to_string(p) + ")| exceeds the cap of "
                           + std::to_string(caps.max_elements) + " elements");
      }
      enumerate();
      compute_inverses();
      compute_classes();
    }

    [[nodiscard]] PrimeField const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _keys.size();
    }
    [[nodiscard]] std::size_t identity() const noexcept {
      return 0;
    }
    [[nodiscard]] std::vector<std::size_t> const& generators() const noexcept {
      return _gens;
    }

    [[nodiscard]] GroupMatrix<PrimeField> element(std::size_t i) const {
      Matrix<PrimeField> m(_field, _n);
      for (std::size_t a = 0; a < _n; ++a) {
        for (std::size_t b = 0; b < _n; ++b) {
          m.at(a, b) = Residue(entry(i, a, b), _field.characteristic());
        }
      }
      return GroupMatrix<PrimeField>(detail::trusted_det, std::move(m));
    }

    //! Index of g; throws if g is not over this field/dimension.
    [[nodiscard]] std::size_t index_of(GroupMatrix<PrimeField> const& g) const {
      if (!(g.field() == _field) || g.size() != _n) {
        throw field_mismatch("element is not in this group");
      }
      std::vector<std::uint32_t> e(_n * _n);
      for (std::size_t a = 0; a < _n; ++a) {
        for (std::size_t b = 0; b < _n; ++b) {
          e[a * _n + b] = static_cast<std::uint32_t>(g(a, b).value());
        }
      }
      return _index.at(key(e.data()));
    }

    [[nodiscard]] std::size_t multiply(std::size_t i, std::size_t j) const {
      if (!_table.empty()) {
        return _table[i * order() + j];
      }
      return multiply_slow(i, j);
    }

    //! Fills a full Cayley table; worthwhile for repeated norm computations
    //! on small groups.
    void cache_products(std::size_t max_order = 2048) {
      if (!_table.empty() || order() > max_order) {
        return;
      }
      _table.resize(order() * order());
      for (std::size_t i = 0; i < order(); ++i) {
        for (std::size_t j = 0; j < order(); ++j) {
          _table[i * order() + j] = multiply_slow(i, j);
        }
      }
    }

    [[nodiscard]] std::size_t inverse(std::size_t i) const {
      return _inverse[i];
    }
    [[nodiscard]] std::size_t conjugate(std::size_t g, std::size_t c) const {
      return multiply(multiply(c, g), _inverse[c]);
    }

    [[nodiscard]] std::vector<std::vector<std::size_t>> const&
    classes() const noexcept {
      return _classes;
    }
    [[nodiscard]] std::size_t class_of(std::size_t i) const {
      return _class_of[i];
    }
    //! Class containing the inverses of the elements of class c.
    [[nodiscard]] std::size_t class_inverse(std::size_t c) const {
      return _class_inverse[c];
    }

    [[nodiscard]] std::string name() const {
      return "SL_" + std::to_string(_n) + "(F_"
             + std::to_string(_field.characteristic()) + ")";
    }

   private:
    std::uint32_t entry(std::size_t i, std::size_t a, std::size_t b) const {
      return _data[i * _n * _n + a * _n + b];
    }

    std::uint64_t key(std::uint32_t const* e) const {
      std::uint64_t k = 0;
      for (std::size_t x = 0; x < _n * _n; ++x) {
        k = k * _field.characteristic() + e[x];
      }
      return k;
    }

    std::size_t insert(std::vector<std::uint32_t> const& e) {
      auto const k        = key(e.data());
      auto [it, inserted] = _index.try_emplace(k, _keys.size());
      if (inserted) {
        _keys.push_back(k);
        _data.insert(_data.end(), e.begin(), e.end());
      }
      return it->second;
    }

    std::vector<std::uint32_t> product(std::size_t i, std::size_t j) const {
      std::uint64_t const        p = _field.characteristic();
      std::vector<std::uint32_t> e(_n * _n);
      for (std::size_t a = 0; a < _n; ++a) {
        for (std::size_t b = 0; b < _n; ++b) {
          std::uint64_t s = 0;
          for (std::size_t c = 0; c < _n; ++c) {
            s = (s + std::uint64_t(entry(i, a, c)) * entry(j, c, b)) % p;
          }
          e[a * _n + b] = static_cast<std::uint32_t>(s);
        }
      }
      return e;
    }

    std::size_t multiply_slow(std::size_t i, std::size_t j) const {
      auto const e = product(i, j);
      return _index.at(key(e.data()));
    }

    // Closure of {I} under right multiplication by E_{i,i+1}(1),
    // E_{i+1,i}(1).
    void enumerate() {
      std::vector<std::uint32_t> id(_n * _n, 0);
      for (std::size_t a = 0; a < _n; ++a) {
        id[a * _n + a] = 1;
      }
      insert(id);
      for (std::size_t i = 0; i + 1 < _n; ++i) {
        for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
          auto e       = id;
          e[a * _n + b] = 1;
          _gens.push_back(insert(e));
        }
      }
      for (std::size_t next = 0; next < _keys.size(); ++next) {
        for (std::size_t gi = 0; gi < _gens.size(); ++gi) {
          insert(product(next, _gens[gi]));
        }
      }
    }

    void compute_inverses() {
      _inverse.assign(order(), 0);
      for (std::size_t i = 0; i < order(); ++i) {
        _inverse[i] = index_of(element(i).inverse());
      }
    }

    // Orbits under conjugation by the generators.
    void compute_classes() {
      constexpr auto unset = std::numeric_limits<std::size_t>::max();
      _class_of.assign(order(), unset);
      for (std::size_t g = 0; g < order(); ++g) {
        if (_class_of[g] != unset) {
          continue;
        }
        std::size_t const        c = _classes.size();
        std::vector<std::size_t> orbit{g};
        _class_of[g] = c;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
          for (std::size_t s : _gens) {
            std::size_t h = conjugate(orbit[k], s);
            if (_class_of[h] == unset) {
              _class_of[h] = c;
              orbit.push_back(h);
            }
          }
        }
        std::sort(orbit.begin(), orbit.end());
        _classes.push_back(std::move(orbit));
      }
      for (auto const& cl : _classes) {
        _class_inverse.push_back(_class_of[_inverse[cl.front()]]);
      }
    }

    PrimeField                                _field;
    std::size_t                               _n;
    std::vector<std::uint32_t>                _data;
    std::vector<std::uint64_t>                _keys;
    std::unordered_map<std::uint64_t, std::size_t> _index;
    std::vector<std::size_t>                  _gens;
    std::vector<std::size_t>                  _inverse;
    std::vector<std::vector<std::size_t>>     _classes;
    std::vector<std::size_t>                  _class_of;
    std::vector<std::size_t>                  _class_inverse;
    std::vector<std::size_t>                  _table;
  };

  //! The classes in \p cs together with their inverse classes.
  [[nodiscard]] inline ClassSet symmetrize(GroupTable const& g,
                                           ClassSet const&   cs) {
    ClassSet out;
    for (std::size_t c : cs) {
      if (c >= g.classes().size()) {
        throw invalid_input("class index " + std::to_string(c)
                            + " out of range");
      }
      out.push_back(c);
      out.push_back(g.class_inverse(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  [[nodiscard]] inline std::vector<std::size_t>
  class_elements(GroupTable const& g, ClassSet const& cs) {
    std::vector<std::size_t> out;
    for (std::size_t c : symmetrize(g, cs)) {
      auto const& cl = g.classes()[c];
      out.insert(out.end(), cl.begin(), cl.end());
    }
    return out;
  }

  inline constexpr int unreachable = -1;

  //! Layered breadth-first search: B(k+1) = B(k) * C where C is the union
  //! of the classes and their inverses.  Unreachable elements get -1.
  [[nodiscard]] inline std::vector<int> ball_norms(GroupTable const& g,
                                                   ClassSet const&   cs) {
    auto const       step = class_elements(g, cs);
    std::vector<int> norm(g.order(), unreachable);
    norm[g.identity()] = 0;
    std::vector<std::size_t> layer{g.identity()};
    for (int radius = 1; !layer.empty(); ++radius) {
      std::vector<std::size_t> next;
      for (std::size_t x : layer) {
        for (std::size_t s : step) {
          std::size_t const y = g.multiply(x, s);
          if (norm[y] == unreachable) {
            norm[y] = radius;
            next.push_back(y);
          }
        }
      }
      layer = std::move(next);
    }
    return norm;
  }

  //! True iff the classes in cs (with inverses) generate the whole group.
  [[nodiscard]] inline bool normally_generates(GroupTable const& g,
                                               ClassSet const&   cs) {
    auto const norm = ball_norms(g, cs);
    return std::none_of(norm.begin(), norm.end(),
                        [](int v) { return v == unreachable; });
  }

  struct NormTable {
    ClassSet         class_set;
    std::vector<int> norm;
    int              diameter = 0;
  };

  //! Exact word norms; throws precondition_failure unless cs normally
  //! generates.
  [[nodiscard]] inline NormTable norm_ball_table(GroupTable const& g,
                                                 ClassSet const&   cs) {
    NormTable t{cs, ball_norms(g, cs), 0};
    for (int v : t.norm) {
      if (v == unreachable) {
        throw precondition_failure("class set does not normally generate "
                                   + g.name());
      }
      t.diameter = std::max(t.diameter, v);
    }
    return t;
  }

  struct SubsetResult {
    ClassSet class_set;
    bool     generates = false;
    int      diameter  = 0;  // 0 when not generating
  };

  struct DeltaReport {
    int                       delta = 0;
    std::vector<int>          delta_k;    // delta_k[k-1] = Delta_k
    std::vector<ClassSet>     witnesses;  // a class set attaining Delta_k
    ClassSet                  delta_witness;
    std::vector<SubsetResult> results;    // every nonempty class subset
  };

  //! Delta and Delta_k, k = 1..max_classes, by enumerating all nonempty
  //! class subsets.  A class subset of size k is realised by k elements, so
  //! Delta_k maximises over subsets of size <= k.
  [[nodiscard]] inline DeltaReport delta(GroupTable const&          g,
                                         std::optional<std::size_t> max_classes
                                         = std::nullopt,
                                         Caps const& caps = {}) {
    std::size_t const m = g.classes().size();
    if (m >= 63 || (std::uint64_t(1) << m) > caps.max_subsets) {
      throw cap_exceeded(std::to_string(m) + " classes give more than "
                         + std::to_string(caps.max_subsets) + " subsets");
    }
    std::size_t const kmax = std::min(max_classes.value_or(m), m);

    std::unordered_map<std::uint64_t, int> by_closed;  // -1: not generating
    DeltaReport                            rep;
    rep.delta_k.assign(kmax, 0);
    rep.witnesses.assign(kmax, {});
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
      ClassSet cs;
      for (std::size_t c = 0; c < m; ++c) {
        if ((mask >> c) & 1U) {
          cs.push_back(c);
        }
      }
      std::uint64_t closed = 0;
      for (std::size_t c : symmetrize(g, cs)) {
        closed |= std::uint64_t(1) << c;
      }
      auto it = by_closed.find(closed);
      if (it == by_closed.end()) {
        auto const norm = ball_norms(g, cs);
        int        d    = 0;
        for (int v : norm) {
          if (v == unreachable) {
            d = -1;
            break;
          }
          d = std::max(d, v);
        }
        it = by_closed.emplace(closed, d).first;
      }
      int const d = it->second;
      rep.results.push_back({cs, d >= 0, std::max(d, 0)});
      if (d < 0) {
        continue;
      }
      if (d > rep.delta) {
        rep.delta         = d;
        rep.delta_witness = cs;
      }
      for (std::size_t k = cs.size(); k <= kmax; ++k) {
        if (d > rep.delta_k[k - 1]) {
          rep.delta_k[k - 1]   = d;
          rep.witnesses[k - 1] = cs;
        }
      }
    }
    return rep;
  }

  struct Example64Report {
    std::string group;
    std::size_t order      = 0;
    std::size_t class_index = 0;
    std::size_t class_size = 0;
    bool        generates  = false;
    int         diameter   = 0;
    std::size_t rank       = 0;
  };

  //! Diameter of SL_n(F_p) with respect to the class of E_{0,n-1}(1).
  [[nodiscard]] inline Example64Report example64_analog(std::size_t   n,
                                                        std::uint64_t p,
                                                        Caps const&   caps = {}) {
    GroupTable g(n, p, caps);
    g.cache_products();
    auto const  e   = elementary(g.field(), n, 0, n - 1, g.field().one());
    std::size_t cls = g.class_of(g.index_of(e));
    Example64Report rep{g.name(), g.order(), cls, g.classes()[cls].size(),
                        false,    0,         n - 1};
    auto const norm = ball_norms(g, {cls});
    rep.generates   = std::none_of(norm.begin(), norm.end(),
                                 [](int v) { return v == unreachable; });
    if (rep.generates) {
      rep.diameter = *std::max_element(norm.begin(), norm.end());
    }
    return rep;
  }

}  // namespace normgen::oracle

#endif  // NORMGEN_ORACLE_HPP_
