#include "nagaolab/io.hpp"

#include <sstream>

#include "nagaolab/nagao.hpp"

namespace nagaolab {

  namespace {
    mpz_class integer_from_json(json const& j) {
      if (j.is_number_integer()) {
        return mpz_class(j.dump());
      }
      if (j.is_string()) {
        std::string const s = j.get<std::string>();
        mpz_class         v;
        if (s.empty() || v.set_str(s, 10) != 0) {
          throw ParseError("invalid integer '" + s + "'", 0);
        }
        return v;
      }
      throw ParseError("expected an integer, got " + j.dump(), 0);
    }

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw ParseError(what, 0);
      }
    }
  }  // namespace

  json to_json(Poly const& f) {
    json coeffs = json::array();
    for (auto const& c : f.coeffs()) {
      coeffs.push_back(c.get_str());
    }
    json out = {{"coeffs", std::move(coeffs)}};
    if (f.ring().is_field()) {
      out["mod"] = f.ring().modulus();
    }
    return out;
  }

  Poly poly_from_json(json const& j, Ring ring) {
    if (j.is_string()) {
      return parse_poly(j.get<std::string>(), ring);
    }
    json const* coeffs = &j;
    if (j.is_object()) {
      require(j.contains("coeffs"), "polynomial object without \"coeffs\"");
      coeffs = &j.at("coeffs");
      if (j.contains("mod")) {
        require(j.at("mod").is_number_unsigned(), "\"mod\" must be a positive integer");
        Ring const declared = Ring::mod(j.at("mod").get<std::uint64_t>());
        if (declared != ring) {
          throw RingMismatch("polynomial over " + declared.name() + ", expected " + ring.name());
        }
      }
    }
    require(coeffs->is_array(), "expected a polynomial, got " + j.dump());
    std::vector<mpz_class> values;
    values.reserve(coeffs->size());
    for (auto const& c : *coeffs) {
      values.push_back(integer_from_json(c));
    }
    return Poly(ring, std::move(values));
  }

  json to_json(Mat2 const& m) {
    return json::array({json::array({to_json(m.a()), to_json(m.b())}),
                        json::array({to_json(m.c()), to_json(m.d())})});
  }

  Mat2 mat_from_json(json const& j, Ring ring) {
    if (j.is_string()) {
      return parse_matrix(j.get<std::string>(), ring);
    }
    require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2
                && j[1].is_array() && j[1].size() == 2,
            "expected a 2x2 array, got " + j.dump());
    return Mat2(poly_from_json(j[0][0], ring),
                poly_from_json(j[0][1], ring),
                poly_from_json(j[1][0], ring),
                poly_from_json(j[1][1], ring));
  }

  json to_json(Word const& w) {
    json out = json::array();
    for (auto const& l : w) {
      out.push_back({{"factor", static_cast<int>(l.factor)}, {"matrix", to_json(l.element.matrix())}});
    }
    return out;
  }

  namespace {
    Factor factor_from_json(json const& j) {
      require(j.is_number_integer() && (j.get<int>() == 1 || j.get<int>() == 2),
              "factor must be 1 or 2, got " + j.dump());
      return j.get<int>() == 1 ? Factor::one : Factor::two;
    }
  }  // namespace

  Word word_from_json(json const& j, Ring ring) {
    Word out;
    if (j.is_object()) {
      require(j.contains("head") && j.contains("tail") && j.contains("tags"),
              "normal form object needs \"head\", \"tail\" and \"tags\"");
      json const& tail = j.at("tail");
      json const& tags = j.at("tags");
      require(tail.is_array() && tags.is_array() && tail.size() == tags.size(),
              "\"tail\" and \"tags\" must be arrays of equal length");
      out.push_back(Letter{Factor::one, SL2(mat_from_json(j.at("head"), ring))});
      for (std::size_t k = 0; k < tail.size(); ++k) {
        out.push_back(Letter{factor_from_json(tags[k]), SL2(mat_from_json(tail[k], ring))});
      }
      return out;
    }
    require(j.is_array(), "expected a word (array), got " + j.dump());
    for (auto const& entry : j) {
      if (entry.is_string()) {
        Word const expanded = classify({parse_generator(entry.get<std::string>(), ring)});
        out.insert(out.end(), expanded.begin(), expanded.end());
      } else if (entry.is_object()) {
        require(entry.contains("factor") && entry.contains("matrix"),
                "letter object needs \"factor\" and \"matrix\"");
        out.push_back(Letter{factor_from_json(entry.at("factor")),
                             SL2(mat_from_json(entry.at("matrix"), ring))});
      } else {
        throw ParseError("unexpected word entry " + entry.dump(), 0);
      }
    }
    return out;
  }

  json to_json(NormalForm const& x) {
    json tail = json::array();
    json tags = json::array();
    for (auto const& l : x.tail) {
      tail.push_back(to_json(l.element.matrix()));
      tags.push_back(static_cast<int>(l.factor));
    }
    return {{"structure", x.structure},
            {"head", to_json(x.head.matrix())},
            {"tail", std::move(tail)},
            {"tags", std::move(tags)}};
  }

  json to_json(WedgeClass const& x) {
    json monomials = json::array();
    json coeffs    = json::array();
    for (auto const& [m, c] : x.terms()) {
      monomials.push_back(m.exponents());
      coeffs.push_back(c.get_str());
    }
    json out = {{"monomials", std::move(monomials)}, {"coeffs", std::move(coeffs)}};
    if (x.ring().is_field()) {
      out["mod"] = x.ring().modulus();
    }
    return out;
  }

  WedgeClass wedge_class_from_json(json const& j) {
    require(j.is_object() && j.contains("monomials") && j.contains("coeffs"),
            "wedge class needs \"monomials\" and \"coeffs\"");
    json const& monomials = j.at("monomials");
    json const& coeffs    = j.at("coeffs");
    require(monomials.is_array() && coeffs.is_array() && monomials.size() == coeffs.size(),
            "\"monomials\" and \"coeffs\" must be arrays of equal length");
    Ring ring = Ring::integers();
    if (j.contains("mod")) {
      require(j.at("mod").is_number_unsigned(), "\"mod\" must be a positive integer");
      ring = Ring::mod(j.at("mod").get<std::uint64_t>());
    }
    WedgeClass out(ring);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      require(monomials[k].is_array(), "monomial must be an array of exponents");
      std::vector<unsigned> factors;
      for (auto const& e : monomials[k]) {
        require(e.is_number_unsigned(), "exponent must be a positive integer");
        factors.push_back(e.get<unsigned>());
      }
      SignedMonomial const sm = wedge_of(std::move(factors));
      if (sm.sign != 0) {
        out.add_term(sm.monomial, integer_from_json(coeffs[k]) * sm.sign);
      }
    }
    return out;
  }

  json to_json(GradedDimTable const& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.dims.size(); ++i) {
      rows.push_back({{"i", i}, {"dim", t.dims[i]}});
    }
    return {{"group", std::string(to_string(t.group))},
            {"p", t.prime},
            {"d", t.truncation},
            {"flags", t.flags},
            {"rows", std::move(rows)}};
  }

  std::string tables_to_csv(std::vector<GradedDimTable> const& tables) {
    std::ostringstream out;
    out << "group,p,d,i,dim,flags\n";
    for (auto const& t : tables) {
      std::string flags;
      for (auto const& f : t.flags) {
        flags += (flags.empty() ? "" : ";") + f;
      }
      for (std::size_t i = 0; i < t.dims.size(); ++i) {
        out << to_string(t.group) << ',' << t.prime << ',' << t.truncation << ',' << i << ','
            << t.dims[i] << ',' << flags << '\n';
      }
    }
    return out.str();
  }

  json to_json(LedgerReport const& r) {
    return {{"p", r.prime},
            {"i", r.degree},
            {"d", r.truncation},
            {"e2zt", r.e2_zt},
            {"bzt", r.b_zt},
            {"sl2z", r.sl2_z},
            {"bz", r.b_z},
            {"holds", r.holds()}};
  }

  json to_json(CheckReport const& r) {
    json items = json::array();
    for (auto const& c : r.items) {
      items.push_back({{"id", c.id},
                       {"statement", c.statement},
                       {"reference", c.reference},
                       {"status", std::string(to_string(c.status))},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs}});
    }
    return {{"items", std::move(items)},
            {"summary",
             {{"pass", r.count(CheckStatus::pass)},
              {"fail", r.count(CheckStatus::fail)},
              {"informational", r.count(CheckStatus::informational)}}},
            {"ok", r.all_asserted_pass()}};
  }

  json to_json(SnWitness const& w) {
    json out = {{"p", w.prime}, {"n", w.arity}, {"exists", w.exists()}};
    out["residues"] = w.residues ? json(*w.residues) : json(nullptr);
    out["nodes_visited"] = w.nodes_visited;
    return out;
  }

}  // namespace nagaolab
