#include "latcd/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcd/canonical.hpp"
#include "latcd/congruence.hpp"
#include "latcd/constructions.hpp"
#include "latcd/enumeration.hpp"
#include "latcd/lattice_json.hpp"
#include "latcd/structure.hpp"
#include "latcd/verify.hpp"

namespace latcd {

  using nlohmann::json;
  using ordered_json = nlohmann::ordered_json;

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Construction terms
    ////////////////////////////////////////////////////////////////////////

    class TermParser {
     public:
      explicit TermParser(std::string_view text) : s_(text) {}

      Lattice parse() {
        Lattice L = term();
        if (pos_ != s_.size()) {
          fail("unexpected '" + std::string(s_.substr(pos_)) + "'");
        }
        return L;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw Error(ErrorKind::Grammar, "in '" + std::string(s_) + "' at offset "
                                            + std::to_string(pos_) + ": " + why);
      }

      bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      std::string word() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
      }

      std::size_t number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        if (start == pos_ || pos_ - start > 9) {
          fail("expected a number");
        }
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
      }

      std::string path() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected a file name");
        }
        return std::string(s_.substr(start, pos_ - start));
      }

      ElementId file_id(Lattice const& L, std::size_t label) {
        ElementId id = L.find_origin(static_cast<ElementId>(label));
        if (id == L.size()) {
          fail("element " + std::to_string(label) + " is not in the file");
        }
        return id;
      }

      Lattice term() {
        if (peek('(')) {
          ++pos_;
          Lattice L = term();
          expect(')');
          return L;
        }
        std::string const name = word();
        if (name == "b4") {
          return boolean4();
        }
        if (name.empty()) {
          fail("expected a construction name");
        }
        expect(':');
        if (name == "chain") {
          return chain(number());
        }
        if (name == "mk") {
          return m_k(number());
        }
        if (name == "nk") {
          return n_k(number());
        }
        if (name == "lkn") {
          std::size_t k = number();
          expect(',');
          return l_k_n(k, number());
        }
        if (name == "prod") {
          Lattice a = term();
          expect(',');
          return direct_product(a, term());
        }
        if (name == "gsum") {
          std::vector<Lattice> parts{term()};
          while (peek(',')) {
            ++pos_;
            parts.push_back(term());
          }
          return glued_sum_all(parts);
        }
        if (name == "file") {
          return read_lattice_file(path());
        }
        if (name == "opx") {
          Lattice L = read_lattice_file(path());
          expect(',');
          ElementId lo = file_id(L, number());
          expect(',');
          ElementId hi = file_id(L, number());
          return one_point_extension(L, {lo, hi});
        }
        if (name == "mext") {
          Lattice L = read_lattice_file(path());
          // π: the file's edges in lexicographic order of the file's ids.
          std::vector<Edge> file_edges;
          for (auto const& [lo, hi] : L.covers()) {
            file_edges.emplace_back(L.origin(lo), L.origin(hi));
          }
          std::sort(file_edges.begin(), file_edges.end());
          EdgeEnumeration pi;
          for (auto const& [lo, hi] : file_edges) {
            pi.emplace_back(L.find_origin(lo), L.find_origin(hi));
          }
          ExtensionVector s;
          while (peek(',')) {
            ++pos_;
            s.push_back(number());
          }
          return multi_point_extension(L, pi, s);
        }
        fail("unknown construction '" + name + "'");
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
    };

    ////////////////////////////////////////////////////////////////////////
    // Output helpers
    ////////////////////////////////////////////////////////////////////////

    enum class Format { Text, Json, Csv };

    ordered_json bigint_json(BigInt const& v) {
      if (v <= std::numeric_limits<std::uint64_t>::max()) {
        return v.convert_to<std::uint64_t>();
      }
      return v.str();
    }

    ordered_json edges_json(std::vector<Edge> const& edges) {
      ordered_json a = ordered_json::array();
      for (auto const& [lo, hi] : edges) {
        a.push_back({lo, hi});
      }
      return a;
    }

    ordered_json ids_json(std::vector<ElementId> const& ids) {
      return ordered_json(ids);
    }

    ordered_json record_json(DensityRecord const& r) {
      return {{"size", r.size},
              {"con_count", bigint_json(r.con_count)},
              {"density", r.density.str()},
              {"density_decimal", r.density.decimal(10)},
              {"modular", r.modular},
              {"semimodular", r.semimodular},
              {"distributive", r.distributive},
              {"canonical_code", r.code.hex()}};
    }

    constexpr char const* kCsvHeader =
        "size,con_count,density,density_decimal,modular,semimodular,distributive,"
        "canonical_code";

    std::string record_csv(DensityRecord const& r) {
      std::ostringstream os;
      os << r.size << ',' << r.con_count << ',' << r.density.str() << ','
         << r.density.decimal(10) << ',' << (r.modular ? "true" : "false") << ','
         << (r.semimodular ? "true" : "false") << ','
         << (r.distributive ? "true" : "false") << ',' << r.code.hex();
      return os.str();
    }

    std::string join_ids(std::vector<ElementId> const& ids) {
      std::string s = "[";
      for (std::size_t i = 0; i < ids.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(ids[i]);
      }
      return s + "]";
    }

    std::string join_edges(std::vector<Edge> const& edges) {
      std::string s = "[";
      for (std::size_t i = 0; i < edges.size(); ++i) {
        s += (i ? ", " : "") + std::string("(") + std::to_string(edges[i].first) + ", "
             + std::to_string(edges[i].second) + ")";
      }
      return s + "]";
    }

    std::vector<ElementId> bits(Bitset const& b) {
      std::vector<ElementId> out;
      b.for_each([&](std::size_t x) { out.push_back(static_cast<ElementId>(x)); });
      return out;
    }

    int exit_code_for(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::BudgetExceeded:
        case ErrorKind::SizeGuard: return kExitBudget;
        default: return kExitUsage;
      }
    }

    struct Options {
      Format      format = Format::Text;
      std::string format_name = "text";
      std::string command_echo;
    };

    void echo(Options const& o, std::ostream& out) {
      if (o.format == Format::Text) {
        out << "command: " << o.command_echo << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_analyze(Options const& o, std::string const& file, std::ostream& out) {
      Lattice const L       = read_lattice_file(file);
      auto const    p       = profile(L);
      BigInt const  cc      = con_count(L);
      Dyadic const  cd      = congruence_density(L);
      auto const    sk      = skeleton(L);
      auto const    gluing  = gluing_edges(L);
      Lattice const cr      = core(L);
      auto const    nar     = bits(narrows(L));
      bool const    mod     = is_modular(L);
      bool const    semi    = is_semimodular(L);
      bool const    distr   = is_distributive(L);
      std::string   code    = canonical_form(L).hex();

      if (o.format == Format::Json) {
        ordered_json j{{"command", o.command_echo},
                       {"size", L.size()},
                       {"jir", ids_json(p.jir)},
                       {"mir", ids_json(p.mir)},
                       {"jr", ids_json(p.jr)},
                       {"mr", ids_json(p.mr)},
                       {"nar", ids_json(nar)},
                       {"con_count", bigint_json(cc)},
                       {"density", cd.str()},
                       {"density_decimal", cd.decimal(10)},
                       {"modular", mod},
                       {"semimodular", semi},
                       {"distributive", distr},
                       {"skeleton_size", sk.size()},
                       {"rno", reducibility_number(L)},
                       {"core_size", cr.size()},
                       {"gluing_edges", edges_json(gluing)},
                       {"canonical_code", code}};
        out << j.dump(2) << '\n';
        return kExitOk;
      }
      if (o.format == Format::Csv) {
        out << kCsvHeader << '\n' << record_csv(density_record(L)) << '\n';
        return kExitOk;
      }
      echo(o, out);
      out << "size: " << L.size() << '\n'
          << "jir: " << join_ids(p.jir) << '\n'
          << "mir: " << join_ids(p.mir) << '\n'
          << "jr: " << join_ids(p.jr) << '\n'
          << "mr: " << join_ids(p.mr) << '\n'
          << "nar: " << join_ids(nar) << '\n'
          << "con_count: " << cc << '\n'
          << "density: " << density_display(cd) << '\n'
          << "modular: " << std::boolalpha << mod << '\n'
          << "semimodular: " << semi << '\n'
          << "distributive: " << distr << '\n'
          << "skeleton_size: " << sk.size() << '\n'
          << "rno: " << reducibility_number(L) << '\n'
          << "core_size: " << cr.size() << '\n'
          << "gluing_edges: " << join_edges(gluing) << '\n'
          << "canonical_code: " << code << '\n';
      return kExitOk;
    }

    int cmd_construct(Options const& o, std::string const& term,
                      std::string const& out_file, std::ostream& out) {
      Lattice const L  = construct_from_term(term);
      Dyadic const  cd = congruence_density(L);
      if (!out_file.empty()) {
        write_lattice_file(out_file, L);
      }
      if (o.format == Format::Json) {
        ordered_json j{{"command", o.command_echo},
                       {"size", L.size()},
                       {"con_count", bigint_json(con_count(L))},
                       {"density", cd.str()},
                       {"density_decimal", cd.decimal(10)},
                       {"lattice", ordered_json::parse(lattice_to_json(L))}};
        out << j.dump(2) << '\n';
        return kExitOk;
      }
      if (o.format == Format::Csv) {
        out << kCsvHeader << '\n' << record_csv(density_record(L)) << '\n';
        return kExitOk;
      }
      echo(o, out);
      out << "size: " << L.size() << '\n'
          << "density: " << density_display(cd) << '\n';
      if (out_file.empty()) {
        out << "lattice: " << lattice_to_json(L) << '\n';
      } else {
        out << "written: " << out_file << '\n';
      }
      return kExitOk;
    }

    void write_emit(std::string const& file, std::vector<DensityRecord> const& rows) {
      std::ofstream f(file);
      if (!f) {
        throw Error(ErrorKind::InvalidInput, "cannot write '" + file + "'");
      }
      for (auto const& r : rows) {
        f << record_json(r).dump() << '\n';
      }
    }

    int cmd_enum(Options const& o, std::size_t lo, std::size_t hi, LatticeClass cls,
                 std::size_t budget, std::string const& emit, std::ostream& out) {
      std::vector<DensityRecord> rows;
      for (std::size_t n = lo; n <= hi; ++n) {
        auto part = density_records(n, cls, budget);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      if (!emit.empty()) {
        write_emit(emit, rows);
      }
      if (o.format == Format::Json) {
        ordered_json a = ordered_json::array();
        for (auto const& r : rows) {
          a.push_back(record_json(r));
        }
        out << ordered_json{{"command", o.command_echo},
                            {"class", to_string(cls)},
                            {"count", rows.size()},
                            {"lattices", a}}
                   .dump(2)
            << '\n';
        return kExitOk;
      }
      if (o.format == Format::Csv) {
        out << kCsvHeader << '\n';
        for (auto const& r : rows) {
          out << record_csv(r) << '\n';
        }
        return kExitOk;
      }
      echo(o, out);
      for (auto const& r : rows) {
        out << r.size << "  " << r.con_count << "  " << density_display(r.density)
            << "  " << (r.modular ? 'M' : '-') << (r.semimodular ? 'S' : '-')
            << (r.distributive ? 'D' : '-') << "  " << r.code.hex() << '\n';
      }
      out << "count: " << rows.size() << '\n';
      return kExitOk;
    }

    int cmd_scd(Options const& o, LatticeClass cls, std::size_t max_size,
                std::optional<std::string> const& min_p, std::size_t budget,
                std::ostream& out) {
      auto rows = min_p ? scd_slice(cls, max_size, Dyadic::parse(*min_p), budget)
                        : scd(cls, max_size, budget);
      if (o.format == Format::Json) {
        ordered_json a = ordered_json::array();
        for (auto const& r : rows) {
          a.push_back({{"density", r.density.str()},
                       {"density_decimal", r.density.decimal(10)},
                       {"witness_size", r.witness_size},
                       {"witness", r.witness.hex()}});
        }
        out << ordered_json{{"command", o.command_echo},
                            {"class", to_string(cls)},
                            {"max_size", max_size},
                            {"densities", a}}
                   .dump(2)
            << '\n';
        return kExitOk;
      }
      if (o.format == Format::Csv) {
        out << "density,density_decimal,witness_size,witness\n";
        for (auto const& r : rows) {
          out << r.density.str() << ',' << r.density.decimal(10) << ','
              << r.witness_size << ',' << r.witness.hex() << '\n';
        }
        return kExitOk;
      }
      echo(o, out);
      for (auto const& r : rows) {
        out << density_display(r.density) << "  size " << r.witness_size << "  "
            << r.witness.hex() << '\n';
      }
      out << "count: " << rows.size() << '\n';
      return kExitOk;
    }

    int cmd_lnc(Options const& o, LatticeClass cls, std::size_t n, std::size_t k,
                std::size_t budget, std::ostream& out) {
      BigInt v = lnc(cls, n, k, budget);
      if (o.format == Format::Json) {
        out << ordered_json{{"command", o.command_echo},
                            {"class", to_string(cls)},
                            {"size", n},
                            {"k", k},
                            {"lnc", bigint_json(v)}}
                   .dump(2)
            << '\n';
        return kExitOk;
      }
      if (o.format == Format::Csv) {
        out << "class,size,k,lnc\n" << to_string(cls) << ',' << n << ',' << k << ','
            << v << '\n';
        return kExitOk;
      }
      echo(o, out);
      out << "lnc(" << to_string(cls) << ", " << n << ", " << k << ") = " << v << '\n';
      return kExitOk;
    }

    int cmd_verify(Options const& o, std::string const& suite,
                   std::optional<std::size_t> max_size, bool slow, std::ostream& out) {
      VerifyReport const report = run_verify(suite, {max_size, slow});
      if (o.format == Format::Json) {
        ordered_json a = ordered_json::array();
        for (auto const& c : report.checks) {
          a.push_back({{"suite", c.suite},
                       {"check", c.name},
                       {"max_size", c.max_size},
                       {"cases", c.cases},
                       {"status", c.informational ? "info" : c.passed ? "pass" : "fail"},
                       {"detail", c.detail}});
        }
        out << ordered_json{{"command", o.command_echo},
                            {"suite", suite},
                            {"passed", report.passed()},
                            {"checks", a}}
                   .dump(2)
            << '\n';
      } else if (o.format == Format::Csv) {
        out << "suite,check,max_size,cases,status,detail\n";
        for (auto const& c : report.checks) {
          out << c.suite << ',' << c.name << ',' << c.max_size << ',' << c.cases << ','
              << (c.informational ? "info" : c.passed ? "pass" : "fail") << ",\""
              << c.detail << "\"\n";
        }
      } else {
        echo(o, out);
        for (auto const& c : report.checks) {
          out << (c.informational ? "INFO" : c.passed ? "PASS" : "FAIL") << ' '
              << c.suite << '/' << c.name;
          if (c.max_size) {
            out << " (size <= " << c.max_size << ")";
          }
          out << " cases=" << c.cases;
          if (!c.detail.empty()) {
            out << " :: " << c.detail;
          }
          out << '\n';
        }
        out << "result: " << (report.passed() ? "passed" : "FAILED") << '\n';
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    int cmd_convergence(Options const& o, std::size_t n, std::size_t k_max,
                        std::ostream& out) {
      auto const rows = convergence_table(n, k_max);
      bool       ok   = true;
      for (auto const& r : rows) {
        ok = ok && r.engine == r.formula;
      }
      if (o.format == Format::Json) {
        ordered_json a = ordered_json::array();
        for (auto const& r : rows) {
          a.push_back({{"k", r.k},
                       {"engine", r.engine.str()},
                       {"formula", r.formula.str()},
                       {"limit", r.limit.str()},
                       {"gap_decimal", (r.engine - r.limit).decimal(10)}});
        }
        out << ordered_json{{"command", o.command_echo}, {"n", n},
                            {"agree", ok},   {"rows", a}}
                   .dump(2)
            << '\n';
      } else if (o.format == Format::Csv) {
        out << "k,engine,formula,limit,gap_decimal\n";
        for (auto const& r : rows) {
          out << r.k << ',' << r.engine.str() << ',' << r.formula.str() << ','
              << r.limit.str() << ',' << (r.engine - r.limit).decimal(10) << '\n';
        }
      } else {
        echo(o, out);
        for (auto const& r : rows) {
          out << "k=" << r.k << "  " << density_display(r.engine) << "  limit "
              << r.limit.str() << '\n';
        }
        out << "engine matches formula: " << (ok ? "yes" : "no") << '\n';
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }

    int cmd_coordinates(Options const& o, std::string const& file, std::ostream& out) {
      Lattice const L   = read_lattice_file(file);
      auto const    dec = skeleton_coordinates(L);
      bool const    roundtrip
          = is_isomorphic(multi_point_extension(dec.skeleton, dec.pi, dec.s), L);
      if (o.format == Format::Text) {
        echo(o, out);
        out << "skeleton: " << lattice_to_json(dec.skeleton) << '\n'
            << "embedding: " << join_ids(dec.embedding) << '\n'
            << "pi: " << join_edges(dec.pi) << '\n'
            << "s: [";
        for (std::size_t i = 0; i < dec.s.size(); ++i) {
          out << (i ? ", " : "") << dec.s[i];
        }
        out << "]\nroundtrip_ok: " << std::boolalpha << roundtrip << '\n';
      } else {
        out << ordered_json{{"skeleton", ordered_json::parse(lattice_to_json(dec.skeleton))},
                            {"embedding", ids_json(dec.embedding)},
                            {"pi", edges_json(dec.pi)},
                            {"s", dec.s},
                            {"roundtrip_ok", roundtrip}}
                   .dump(2)
            << '\n';
      }
      return roundtrip ? kExitOk : kExitVerifyFailed;
    }

    // Lattices with an element of at least k covers whose density still
    // exceeds 2^-k. Reports only.
    int cmd_weak_ramsey(Options const& o, std::size_t max_size, std::size_t k,
                        std::ostream& out) {
      Dyadic const             bound = Dyadic::pow2_neg(k);
      std::size_t              with_covers = 0;
      std::vector<std::string> found;
      for_each_lattice(max_size, LatticeClass::All,
                       [&](Lattice const& L, CanonicalCode const& code) {
                         if (max_cover_count(L) < k) {
                           return;
                         }
                         ++with_covers;
                         if (congruence_density(L) > bound) {
                           found.push_back(code.hex());
                         }
                       },
                       std::max(max_size, kDefaultBudget));
      if (o.format == Format::Text) {
        echo(o, out);
        out << "lattices with an element of >= " << k << " covers: " << with_covers
            << '\n'
            << "of those with cd > 2^-" << k << ": " << found.size() << '\n';
        for (auto const& c : found) {
          out << "  " << c << '\n';
        }
      } else {
        out << ordered_json{{"command", o.command_echo},
                            {"max_size", max_size},
                            {"k", k},
                            {"with_covers", with_covers},
                            {"exceeding", found}}
                   .dump(2)
            << '\n';
      }
      return kExitOk;
    }

  }  // namespace

  Lattice construct_from_term(std::string_view term) {
    return TermParser(term).parse();
  }

  std::string density_display(Dyadic const& d) {
    return d.str() + " ≈ " + d.decimal(10);
  }

  std::string to_dot(Lattice const& L) {
    auto const                                   depth = depths(L);
    auto const                                   glue  = gluing_edges(L);
    std::map<std::size_t, std::vector<ElementId>> ranks;
    for (ElementId x = 0; x < L.size(); ++x) {
      ranks[depth[x]].push_back(x);
    }
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (auto const& [d, xs] : ranks) {
      os << "  { rank=same;";
      for (auto x : xs) {
        os << ' ' << x << ';';
      }
      os << " }\n";
    }
    for (auto const& e : L.covers()) {
      os << "  " << e.first << " -> " << e.second;
      if (std::binary_search(glue.begin(), glue.end(), e)) {
        os << " [style=dashed]";
      }
      os << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"Finite lattices and their congruence densities", "latcd"};
    app.require_subcommand(1);
    app.fallthrough();

    Options     o;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "Reserved; no command is randomized");

    std::string class_name = "all";
    std::size_t budget     = kDefaultBudget;
    auto add_class = [&](CLI::App* sub) {
      sub->add_option("--class", class_name, "Lattice class")
          ->check(CLI::IsMember({"all", "modular", "semimodular", "distributive"}));
      sub->add_option("--budget", budget, "Largest lattice size to enumerate");
    };

    std::string file;
    auto*       analyze = app.add_subcommand("analyze", "Report invariants of a lattice file");
    analyze->add_option("file", file, "Lattice JSON")->required();

    std::string term, out_file;
    auto* construct = app.add_subcommand("construct", "Build a lattice from a term");
    construct->add_option("spec", term, "Construction term")->required();
    construct->add_option("-o,--out", out_file, "Write lattice JSON here");

    std::optional<std::size_t> size, max_size;
    std::string                emit;
    auto* en = app.add_subcommand("enum", "Enumerate lattices up to isomorphism");
    en->add_option("--size", size, "Exact size");
    en->add_option("--max-size", max_size, "All sizes 1..N");
    en->add_option("--emit", emit, "Also write JSON lines here");
    add_class(en);

    std::optional<std::string> min_p;
    auto* sc = app.add_subcommand("scd", "Congruence densities up to a size");
    sc->add_option("--max-size", max_size, "Largest size")->required();
    sc->add_option("--min", min_p, "Keep densities >= this dyadic");
    add_class(sc);

    std::size_t k = 1;
    auto*       ln = app.add_subcommand("lnc", "k-th largest congruence count");
    ln->add_option("--size", size, "Lattice size")->required();
    ln->add_option("--k", k, "Rank")->required();
    add_class(ln);

    std::string suite = "all";
    bool        slow  = false;
    auto*       ve    = app.add_subcommand("verify", "Run property suites");
    ve->add_option("--suite", suite, "Suite")
        ->check(CLI::IsMember({"core-ops", "density-laws", "skeleton", "semimodular",
                               "formulas", "all"}));
    ve->add_option("--max-size", max_size, "Size bound for every check");
    ve->add_flag("--slow", slow, "Raise the bound of the slow checks");

    auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
    dot->add_option("file", file, "Lattice JSON")->required();

    std::size_t n_copies = 1, k_max = 16;
    auto* conv = app.add_subcommand("convergence", "Densities of L_{k,n} for k = 8..K");
    conv->add_option("--n", n_copies, "Number of B_4 summands");
    conv->add_option("--k-max", k_max, "Largest k");

    auto* coords = app.add_subcommand("coordinates", "Skeleton coordinates of a lattice");
    coords->add_option("file", file, "Lattice JSON")->required();

    std::size_t cover_k = 3;
    auto* exp = app.add_subcommand("experiment", "Exploratory searches");
    auto* weak = exp->add_subcommand("weak-ramsey",
                                     "Lattices with k covers at one element and cd > 2^-k");
    exp->require_subcommand(1);
    weak->add_option("--max-size", max_size, "Largest size (default 8)");
    weak->add_option("--k", cover_k, "Cover count");

    std::vector<std::string> argv_store{"latcd"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    o.format_name = format;
    o.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    for (auto const& a : args) {
      o.command_echo += (o.command_echo.empty() ? "" : " ") + a;
    }

    try {
      LatticeClass const cls = parse_lattice_class(class_name);
      if (*analyze) {
        return cmd_analyze(o, file, out);
      }
      if (*construct) {
        return cmd_construct(o, term, out_file, out);
      }
      if (*en) {
        if (size.has_value() == max_size.has_value()) {
          err << "error: UsageError: give exactly one of --size and --max-size\n";
          return kExitUsage;
        }
        std::size_t lo = size ? *size : 1;
        std::size_t hi = size ? *size : *max_size;
        return cmd_enum(o, lo, hi, cls, budget, emit, out);
      }
      if (*sc) {
        return cmd_scd(o, cls, *max_size, min_p, budget, out);
      }
      if (*ln) {
        return cmd_lnc(o, cls, *size, k, budget, out);
      }
      if (*ve) {
        return cmd_verify(o, suite, max_size, slow, out);
      }
      if (*dot) {
        out << to_dot(read_lattice_file(file));
        return kExitOk;
      }
      if (*conv) {
        return cmd_convergence(o, n_copies, k_max, out);
      }
      if (*coords) {
        return cmd_coordinates(o, file, out);
      }
      if (*weak) {
        return cmd_weak_ramsey(o, max_size.value_or(8), cover_k, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code_for(e.kind());
    } catch (std::exception const& e) {
      err << "error: InternalError: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitUsage;
  }

}  // namespace latcd
