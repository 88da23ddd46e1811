// JSON encoding of fields, matrices and certificates.
//
//   matrix:      {"n": 2, "field": {"kind": "Q"}, "entries": [["1", "1/2"], ...]}
//                {"n": 2, "field": {"kind": "Fp", "p": 7}, "entries": [["3", ...]]}
//   certificate: {"field": ..., "n": ..., "target": matrix, "base": [matrix],
//                 "word": [{"conjugator": matrix, "base": i, "exponent": +-1}],
//                 "meta": {"length": L, "seed": s, "bound_claimed": B}}
//
// Output is canonical (reduced fractions, residues in [0, p)).  Input is
// accepted loosely: entries may be JSON integers or strings, fractions need
// not be reduced and residues need not be reduced.

#ifndef NORMGEN_IO_HPP_
#define NORMGEN_IO_HPP_

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "certificate.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace normgen::io {

  using json = nlohmann::json;

  [[nodiscard]] inline json field_to_json(FieldSpec const& f) {
    if (f.kind == FieldKind::rationals) {
      return json{{"kind", "Q"}};
    }
    return json{{"kind", "Fp"}, {"p", f.p}};
  }

  [[nodiscard]] inline FieldSpec field_from_json(json const& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw invalid_input("field must be an object with a \"kind\"");
    }
    auto const kind = j["kind"].get<std::string>();
    if (kind == "Q") {
      return FieldSpec::rationals();
    }
    if (kind == "Fp") {
      if (!j.contains("p") || !j["p"].is_number_unsigned()) {
        throw invalid_input("Fp field needs a positive integer \"p\"");
      }
      auto const p = j["p"].get<std::uint64_t>();
      PrimeField check(p);  // validates primality
      return FieldSpec::prime(p);
    }
    throw invalid_input("unknown field kind \"" + kind + "\"");
  }

  //! "Q" or "Fp:<p>", as used on the command line.
  [[nodiscard]] inline FieldSpec parse_field_flag(std::string_view s) {
    if (s == "Q") {
      return FieldSpec::rationals();
    }
    if (s.starts_with("Fp:")) {
      auto const p = detail::parse_integer(s.substr(3));
      if (p <= 0 || !p.fits_ulong_p()) {
        throw invalid_input("bad prime in field \"" + std::string(s) + "\"");
      }
      PrimeField check(p.get_ui());
      return FieldSpec::prime(p.get_ui());
    }
    throw invalid_input("field must be Q or Fp:<p>, got \"" + std::string(s)
                        + "\"");
  }

  template <Field F>
  [[nodiscard]] json matrix_to_json(Matrix<F> const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        row.push_back(m(i, j).to_string());
      }
      rows.push_back(std::move(row));
    }
    return json{{"n", m.size()},
                {"field", field_to_json(m.field().spec())},
                {"entries", std::move(rows)}};
  }

  template <Field F>
  [[nodiscard]] json matrix_to_json(GroupMatrix<F> const& g) {
    return matrix_to_json(g.matrix());
  }

  //! The field a matrix object declares.
  [[nodiscard]] inline FieldSpec matrix_field(json const& j) {
    if (!j.is_object() || !j.contains("field")) {
      throw invalid_input("matrix object lacks \"field\"");
    }
    return field_from_json(j["field"]);
  }

  template <Field F>
  [[nodiscard]] Matrix<F> plain_matrix_from_json(json const& j, F const& f) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
      throw invalid_input("matrix object lacks \"entries\"");
    }
    if (!(matrix_field(j) == f.spec())) {
      throw field_mismatch("matrix is over " + matrix_field(j).to_string()
                           + ", expected " + f.spec().to_string());
    }
    auto const&  rows = j["entries"];
    std::size_t const n = rows.size();
    if (j.contains("n")
        && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != n)) {
      throw invalid_input("\"n\" does not match the number of rows");
    }
    Matrix<F> m(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) {
        throw invalid_input("matrix is not square");
      }
      for (std::size_t k = 0; k < n; ++k) {
        auto const& e = rows[i][k];
        if (e.is_string()) {
          m.at(i, k) = f.parse(e.get<std::string>());
        } else if (e.is_number_integer()) {
          m.at(i, k) = f.parse(e.dump());
        } else {
          throw invalid_input("matrix entries must be strings or integers");
        }
      }
    }
    return m;
  }

  //! Parses and validates det == 1.
  template <Field F>
  [[nodiscard]] GroupMatrix<F> matrix_from_json(json const& j, F const& f) {
    return GroupMatrix<F>(plain_matrix_from_json(j, f));
  }

  template <Field F>
  [[nodiscard]] json certificate_to_json(Certificate<F> const& c) {
    json base = json::array();
    for (auto const& x : c.base) {
      base.push_back(matrix_to_json(x));
    }
    json word = json::array();
    for (auto const& l : c.word) {
      word.push_back(json{{"conjugator", matrix_to_json(l.conjugator)},
                          {"base", l.base_index},
                          {"exponent", l.exponent}});
    }
    return json{{"field", field_to_json(c.field().spec())},
                {"n", c.size()},
                {"target", matrix_to_json(c.target)},
                {"base", std::move(base)},
                {"word", std::move(word)},
                {"meta",
                 {{"length", c.length()},
                  {"seed", c.meta.seed},
                  {"bound_claimed", c.meta.bound_claimed}}}};
  }

  template <Field F>
  [[nodiscard]] Certificate<F> certificate_from_json(json const& j, F const& f) {
    try {
      if (!j.is_object()) {
        throw invalid_input("certificate must be a JSON object");
      }
      if (!(field_from_json(j.at("field")) == f.spec())) {
        throw field_mismatch("certificate field mismatch");
      }
      std::size_t const n      = j.at("n").get<std::size_t>();
      auto              target = matrix_from_json(j.at("target"), f);
      if (target.size() != n) {
        throw invalid_input("target dimension differs from \"n\"");
      }
      std::vector<GroupMatrix<F>> base;
      for (auto const& x : j.at("base")) {
        base.push_back(matrix_from_json(x, f));
      }
      Certificate<F> c{std::move(target), std::move(base), {}, {}};
      for (auto const& l : j.at("word")) {
        c.word.push_back({matrix_from_json(l.at("conjugator"), f),
                          l.at("base").get<std::size_t>(),
                          l.at("exponent").get<int>()});
      }
      if (j.contains("meta")) {
        auto const& m = j["meta"];
        c.meta.seed   = m.value("seed", std::uint64_t(0));
        c.meta.bound_claimed = m.value("bound_claimed", std::size_t(0));
      }
      return c;
    } catch (json::exception const& e) {
      throw invalid_input(std::string("malformed certificate: ") + e.what());
    }
  }

}  // namespace normgen::io

#endif  // NORMGEN_IO_HPP_
