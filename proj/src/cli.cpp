#include "nagaolab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nagaolab/io.hpp"
#include "nagaolab/nagao.hpp"

namespace nagaolab::cli {

  namespace {

    enum class Format { text, json, csv };

    struct UsageError : Error {
      using Error::Error;
    };

    Format parse_format(std::string const& s) {
      if (s == "text") {
        return Format::text;
      }
      if (s == "json") {
        return Format::json;
      }
      if (s == "csv") {
        return Format::csv;
      }
      throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
    }

    std::string read_payload(std::string const& arg, std::istream& in) {
      if (arg != "-") {
        return arg;
      }
      return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }

    std::string trim(std::string s) {
      auto const ws = [](unsigned char c) { return std::isspace(c) != 0; };
      s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
      s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
      return s;
    }

    // Column text with every column padded to its widest cell.
    void print_aligned(std::ostream& out, std::vector<std::vector<std::string>> const& rows) {
      std::vector<std::size_t> width;
      for (auto const& row : rows) {
        width.resize(std::max(width.size(), row.size()));
        for (std::size_t c = 0; c < row.size(); ++c) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      for (auto const& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          line += row[c];
          if (c + 1 < row.size()) {
            line += std::string(width[c] - row[c].size() + 2, ' ');
          }
        }
        out << trim(line) << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////
    // nf
    ////////////////////////////////////////////////////////////////////

    struct NfOptions {
      std::string                  input = "-";
      std::optional<std::uint64_t> mod;
      std::string                  ring;
      std::string                  format = "text";
    };

    // A payload is either a bare matrix or a word.
    struct Payload {
      std::optional<json> word;
      std::optional<json> matrix;
    };

    Payload classify_payload(std::string const& text) {
      std::string const t = trim(text);
      if (t.empty()) {
        throw ParseError("empty input", 0);
      }
      json j = json::parse(t, nullptr, false);
      if (j.is_discarded()) {
        // Not JSON: matrix text, or a single generator read as a word.
        if (t.rfind("[[", 0) == 0) {
          return {std::nullopt, json(t)};
        }
        return {json::array({t}), std::nullopt};
      }
      if (j.is_string()) {
        return {json::array({j}), std::nullopt};
      }
      if (j.is_array() && !j.empty() && j[0].is_array()) {
        return {std::nullopt, std::move(j)};
      }
      if (j.is_array() || j.is_object()) {
        return {std::move(j), std::nullopt};
      }
      throw ParseError("expected a matrix or a word, got " + t, 0);
    }

    void render_nf(std::ostream& out, Format fmt, NormalForm const& nf, Mat2 const& value) {
      if (fmt == Format::json) {
        json j = {{"normal_form", to_json(nf)}, {"length", nf.length()}, {"matrix", to_json(value)}};
        out << j.dump(2) << '\n';
        return;
      }
      if (fmt == Format::csv) {
        throw UsageError("nf has no csv output");
      }
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"structure", nf.structure});
      rows.push_back({"head", to_string(nf.head.matrix())});
      for (std::size_t k = 0; k < nf.tail.size(); ++k) {
        rows.push_back({"tail[" + std::to_string(k + 1) + "]",
                        "factor " + std::to_string(static_cast<int>(nf.tail[k].factor)) + "  "
                            + to_string(nf.tail[k].element.matrix())});
      }
      rows.push_back({"length", std::to_string(nf.length())});
      rows.push_back({"matrix", to_string(value)});
      print_aligned(out, rows);
    }

    int cmd_nf(NfOptions const& o, std::istream& in, std::ostream& out, std::ostream& err) {
      Format const fmt = parse_format(o.format);
      if (!o.ring.empty() && o.ring != "e2zt") {
        throw UsageError("unknown ring '" + o.ring + "' (only e2zt)");
      }
      bool const e2zt = o.ring == "e2zt";
      if (!e2zt && !o.mod) {
        throw UsageError("nf needs --mod p or --ring e2zt");
      }
      Payload const payload = classify_payload(read_payload(o.input, in));

      if (e2zt) {
        if (payload.matrix) {
          err << "nf: refusing a bare matrix over Z[t]: membership in E2(Z[t]) is not "
                 "decidable here because Z[t] is not Euclidean; give the element as a word\n";
          return exit_out_of_scope;
        }
        Word const w = word_from_json(*payload.word, Ring::integers());
        if (o.mod) {
          PhiResult const r = phi_p(w, *o.mod);
          render_nf(out, fmt, r.normal_form, r.matrix);
        } else {
          NormalForm const nf = e2zt_normal_form(w);
          render_nf(out, fmt, nf, nf_evaluate(e2zt_structure(), nf).matrix());
        }
        return exit_ok;
      }

      NagaoStructureFp const s(*o.mod);
      if (payload.matrix) {
        Mat2 const       m  = mat_from_json(*payload.matrix, s.ring());
        NormalForm const nf = nagao_normal_form(s, m);
        render_nf(out, fmt, nf, nf_evaluate(s, nf).matrix());
      } else {
        Word const       w  = word_from_json(*payload.word, s.ring());
        NormalForm const nf = normalize(s, w);
        Mat2 const       m  = nf_evaluate(s, nf).matrix();
        if (!(nagao_normal_form(s, m) == nf)) {
          throw InternalInconsistency("word and matrix routes give different normal forms");
        }
        render_nf(out, fmt, nf, m);
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////
    // hdim
    ////////////////////////////////////////////////////////////////////

    struct HdimOptions {
      std::vector<std::string> groups;
      std::optional<std::uint64_t> mod;
      std::size_t              max_i   = 4;
      std::size_t              max_deg = 4;
      bool                     coinv   = false;
      std::string              basis   = "t";
      bool                     ledger  = false;
      std::string              format  = "text";
    };

    void render_tables(std::ostream& out, Format fmt, std::vector<GradedDimTable> const& tables) {
      switch (fmt) {
        case Format::json: {
          json j = json::array();
          for (auto const& t : tables) {
            j.push_back(to_json(t));
          }
          out << j.dump(2) << '\n';
          return;
        }
        case Format::csv:
          out << tables_to_csv(tables);
          return;
        case Format::text: {
          std::vector<std::vector<std::string>> rows{{"group", "p", "d", "i", "dim", "flags"}};
          for (auto const& t : tables) {
            std::string flags;
            for (auto const& f : t.flags) {
              flags += (flags.empty() ? "" : ";") + f;
            }
            for (std::size_t i = 0; i < t.dims.size(); ++i) {
              rows.push_back({std::string(to_string(t.group)),
                              std::to_string(t.prime),
                              std::to_string(t.truncation),
                              std::to_string(i),
                              std::to_string(t.dims[i]),
                              flags});
            }
          }
          print_aligned(out, rows);
          return;
        }
      }
    }

    int run_ledger(HdimOptions const& o, Format fmt, std::ostream& out) {
      std::vector<LedgerReport> reports;
      bool                      ok = true;
      for (std::size_t i = 0; i <= o.max_i; ++i) {
        reports.push_back(mv_ledger_check(*o.mod, i, o.max_deg));
        ok = ok && reports.back().holds();
      }
      if (fmt == Format::json) {
        json j = json::array();
        for (auto const& r : reports) {
          j.push_back(to_json(r));
        }
        out << json{{"ledger", std::move(j)}, {"ok", ok}}.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows{{"p", "d", "i", "e2zt", "bzt", "sl2z", "bz", "holds"}};
        for (auto const& r : reports) {
          rows.push_back({std::to_string(r.prime),
                          std::to_string(r.truncation),
                          std::to_string(r.degree),
                          std::to_string(r.e2_zt),
                          std::to_string(r.b_zt),
                          std::to_string(r.sl2_z),
                          std::to_string(r.b_z),
                          r.holds() ? "yes" : "no"});
        }
        if (fmt == Format::csv) {
          for (auto const& row : rows) {
            std::string line;
            for (auto const& cell : row) {
              line += (line.empty() ? "" : ",") + cell;
            }
            out << line << '\n';
          }
        } else {
          print_aligned(out, rows);
        }
      }
      return ok ? exit_ok : exit_verification;
    }

    GradedDimTable coinvariant_table(GroupId g, std::uint64_t p, std::size_t max_i, std::size_t d,
                                     CoinvariantBasis basis, CoinvariantPart part) {
      GradedDimTable t{g, p, d, {}, {"coinvariants"}};
      t.flags.emplace_back(basis == CoinvariantBasis::full ? "basis=t^0..t^d" : "basis=t^1..t^d");
      t.flags.emplace_back(part == CoinvariantPart::full ? "part=full" : "part=wedge");
      for (std::size_t i = 0; i <= max_i; ++i) {
        t.dims.push_back(coinvariant_dims(p, i, d, basis, part));
      }
      return t;
    }

    int cmd_hdim(HdimOptions const& o, std::ostream& out) {
      Format const fmt = parse_format(o.format);
      if (!o.mod) {
        throw UsageError("hdim needs --mod p");
      }
      if (!is_prime(*o.mod)) {
        throw UsageError("--mod " + std::to_string(*o.mod) + " is not prime");
      }
      std::size_t const cap = max_degree_from_env();
      if (o.max_deg > cap) {
        throw CapExceeded("--max-deg " + std::to_string(o.max_deg) + " exceeds the cap "
                          + std::to_string(cap) + " (NAGAOLAB_MAX_DEG)");
      }
      if (o.ledger) {
        return run_ledger(o, fmt, out);
      }
      if (o.groups.empty()) {
        throw UsageError("hdim needs --group (or --ledger)");
      }
      std::vector<GradedDimTable> tables;
      for (auto const& name : o.groups) {
        GroupId const g = parse_group_id(name);
        if (o.coinv) {
          if (g != GroupId::b_fpt && g != GroupId::b_fp) {
            throw UsageError("--coinv applies to bfp and bfpt only");
          }
          if (o.basis != "t" && o.basis != "full") {
            throw UsageError("--basis must be t or full");
          }
          CoinvariantBasis const basis = o.basis == "t" ? CoinvariantBasis::t_part : CoinvariantBasis::full;
          std::size_t const      d     = g == GroupId::b_fp ? 0 : o.max_deg;
          tables.push_back(coinvariant_table(g, *o.mod, o.max_i, d, basis, CoinvariantPart::full));
          tables.push_back(coinvariant_table(g, *o.mod, o.max_i, d, basis, CoinvariantPart::wedge));
        } else {
          tables.push_back(h_table(g, *o.mod, o.max_i, o.max_deg));
        }
      }
      render_tables(out, fmt, tables);
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////

    struct VerifyOptions {
      std::vector<std::string>   witness;
      std::vector<std::uint64_t> sn;
      std::vector<std::uint64_t> kernel;
      std::string                format = "text";
    };

    constexpr std::uint64_t witness_prime_cap = 101;

    IndexRange parse_range(std::string const& text) {
      auto const parse_number = [&](std::string const& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })
            || s.size() > 18) {
          throw UsageError("bad range '" + text + "' (expected a..b or a)");
        }
        return std::stoull(s);
      };
      auto const dots = text.find("..");
      IndexRange r;
      if (dots == std::string::npos) {
        r.first = r.last = parse_number(text);
      } else {
        r.first = parse_number(text.substr(0, dots));
        r.last  = parse_number(text.substr(dots + 2));
      }
      if (r.first > r.last) {
        throw UsageError("empty range '" + text + "'");
      }
      return r;
    }

    void render_report(std::ostream& out, Format fmt, CheckReport const& r) {
      if (fmt == Format::json) {
        out << to_json(r).dump(2) << '\n';
        return;
      }
      if (fmt == Format::csv) {
        throw UsageError("verify has no csv output");
      }
      std::vector<std::vector<std::string>> rows;
      for (auto const& c : r.items) {
        rows.push_back({std::string(to_string(c.status)), c.id, c.statement});
      }
      print_aligned(out, rows);
      out << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail) << " failed, "
          << r.count(CheckStatus::informational) << " informational\n";
    }

    int cmd_verify(VerifyOptions const& o, std::ostream& out) {
      Format const fmt = parse_format(o.format);
      int const    modes = !o.witness.empty() + !o.sn.empty() + !o.kernel.empty();
      if (modes != 1) {
        throw UsageError("verify needs exactly one of --witness, --sn, --kernel");
      }
      if (!o.witness.empty()) {
        IndexRange const primes = parse_range(o.witness[0]);
        IndexRange const ks     = parse_range(o.witness[1]);
        if (primes.last > witness_prime_cap) {
          throw CapExceeded("witness primes are capped at " + std::to_string(witness_prime_cap));
        }
        std::size_t const cap = max_degree_from_env();
        if (ks.first < 1 || ks.last > cap) {
          throw CapExceeded("witness indices must lie in 1.." + std::to_string(cap)
                            + " (NAGAOLAB_MAX_DEG)");
        }
        CheckReport const r = verify_witness_suite(primes, ks);
        render_report(out, fmt, r);
        return r.all_asserted_pass() ? exit_ok : exit_verification;
      }
      if (!o.kernel.empty()) {
        CheckReport const r = kernel_combination_check(o.kernel[0], o.kernel[1]);
        render_report(out, fmt, r);
        return r.all_asserted_pass() ? exit_ok : exit_verification;
      }
      SnWitness const w = sn_witness_search(o.sn[0], o.sn[1]);
      if (fmt == Format::json) {
        out << to_json(w).dump(2) << '\n';
      } else if (fmt == Format::csv) {
        throw UsageError("verify has no csv output");
      } else if (w.exists()) {
        std::string tuple;
        for (auto v : *w.residues) {
          tuple += (tuple.empty() ? "" : ", ") + std::to_string(v);
        }
        out << "S(" << w.arity << ") over F_" << w.prime << ": witness (" << tuple << ")\n";
      } else {
        out << "S(" << w.arity << ") over F_" << w.prime << ": none exists\n";
      }
      return exit_ok;
    }

  }  // namespace

  std::size_t max_degree_from_env() {
    char const* raw = std::getenv("NAGAOLAB_MAX_DEG");
    if (raw == nullptr || *raw == '\0') {
      return 16;
    }
    std::string const s(raw);
    if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 6) {
      throw UsageError("NAGAOLAB_MAX_DEG must be a non-negative integer, got '" + s + "'");
    }
    return std::stoul(s);
  }

  int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact normal forms, homology dimensions and identity checks for SL2 over polynomial rings",
                 "nagaolab"};
    app.require_subcommand(1);

    NfOptions nf;
    auto*     nf_cmd = app.add_subcommand("nf", "normal form of a matrix or word");
    nf_cmd->add_option("input", nf.input, "matrix, word or normal form; '-' reads stdin");
    nf_cmd->add_option("--mod", nf.mod, "work in SL2(F_p[t])");
    nf_cmd->add_option("--ring", nf.ring, "e2zt: words in E2(Z[t]); with --mod, their image mod p");
    nf_cmd->add_option("--format", nf.format, "text | json");

    HdimOptions hd;
    auto*       hd_cmd = app.add_subcommand("hdim", "graded F_p homology dimensions");
    hd_cmd->add_option("--group", hd.groups, "tzt tfpt bz bzt bfp bfpt sl2z e2zt sl2fpt")->delimiter(',');
    hd_cmd->add_option("--mod", hd.mod, "coefficient field F_p");
    hd_cmd->add_option("--max-i", hd.max_i, "largest homological degree");
    hd_cmd->add_option("--max-deg", hd.max_deg, "truncation degree d");
    hd_cmd->add_flag("--coinv", hd.coinv, "coinvariant counts (full and pure wedge part)");
    hd_cmd->add_option("--basis", hd.basis, "with --coinv: t (t^1..t^d) or full (t^0..t^d)");
    hd_cmd->add_flag("--ledger", hd.ledger, "check the exact sequence dimension ledger");
    hd_cmd->add_option("--format", hd.format, "text | json | csv");

    VerifyOptions vf;
    auto*         vf_cmd = app.add_subcommand("verify", "check identities between explicit matrices");
    vf_cmd->add_option("--witness", vf.witness, "prime range and index range, e.g. 2..3 1..2")->expected(2);
    vf_cmd->add_option("--sn", vf.sn, "p n: search units a_1..a_n of F_p with all subset sums units")
        ->expected(2);
    vf_cmd->add_option("--kernel", vf.kernel, "p k: kernel combinations for p = 2, 3")->expected(2);
    vf_cmd->add_option("--format", vf.format, "text | json");

    std::vector<char const*> argv;
    argv.reserve(args.size());
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    }

    try {
      if (nf_cmd->parsed()) {
        return cmd_nf(nf, in, out, err);
      }
      if (hd_cmd->parsed()) {
        return cmd_hdim(hd, out);
      }
      return cmd_verify(vf, out);
    } catch (Unsupported const& e) {
      err << "out of scope: " << e.what() << '\n';
      return exit_out_of_scope;
    } catch (InternalInconsistency const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_verification;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (json::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace nagaolab::cli
