// Command line front end: enumeration, representation dumps, verification
// suites, Schur elements and semisimplicity queries for the Yokonuma-Hecke
// algebra Y(d,n) at generic q.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exceeded. Output is byte-deterministic for fixed flags.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "yhdn/combin.hpp"
#include "yhdn/errors.hpp"
#include "yhdn/json_io.hpp"
#include "yhdn/representation.hpp"
#include "yhdn/schur.hpp"
#include "yhdn/suites.hpp"
#include "yhdn/xi.hpp"

namespace {

using yhdn::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// d^n * n! compared against the budget without overflowing
bool over_budget(int d, int n, std::uint64_t budget) {
  std::uint64_t rank = 1;
  const auto step = [&](std::uint64_t f) {
    if (f != 0 && rank > budget / f + 1) rank = budget + 1;
    else rank *= f;
    return rank > budget;
  };
  for (int i = 0; i < n; ++i)
    if (step(static_cast<std::uint64_t>(d))) return true;
  for (int i = 2; i <= n; ++i)
    if (step(static_cast<std::uint64_t>(i))) return true;
  return rank > budget;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct EnumerateCmd {
  std::string kind;
  int d = 1;
  int n = 0;
  bool count_only = false;
  std::string format = "pretty";

  int run() const {
    const auto shapes = yhdn::enumerate_dpartitions(d, n);
    if (kind == "dpartitions") {
      Json out{{"kind", kind}, {"d", d}, {"n", n},
               {"count", shapes.size()}, {"shapes", Json::array()}};
      for (const auto& s : shapes) out["shapes"].push_back(yhdn::dpartition_json(s));
      if (count_only) out.erase("shapes");
      emit(out);
      return kExitOk;
    }

    long long total = 0, squares = 0;
    Json rows = Json::array();
    for (const auto& shape : shapes) {
      const auto tabs = yhdn::enumerate_standard_dtableaux(shape);
      const long long k = static_cast<long long>(tabs.size());
      total += k;
      squares += k * k;
      Json row{{"shape", yhdn::dpartition_json(shape)}, {"count", k}};
      if (!count_only) {
        Json items = Json::array();
        for (const auto& t : tabs) {
          if (kind == "tableaux") {
            items.push_back(yhdn::dtableau_json(t));
          } else {
            const yhdn::ContentArray a = yhdn::tableau_to_content_array(t);
            items.push_back(Json{{"positions", a.positions},
                                 {"contents", a.content_exps}});
          }
        }
        row[kind] = items;
      }
      rows.push_back(row);
    }
    emit(Json{{"kind", kind}, {"d", d}, {"n", n}, {"shapes", rows},
              {"count", total}, {"sum_of_squares", squares}});
    return kExitOk;
  }

  void emit(const Json& out) const {
    if (format == "json") {
      std::cout << out.dump(2) << '\n';
      return;
    }
    if (format == "csv") {
      if (kind == "dpartitions") {
        std::cout << "shape\n";
        if (out.contains("shapes"))
          for (const auto& s : out.at("shapes")) std::cout << csv_quote(s.dump()) << '\n';
        std::cout << "count," << out.at("count").get<long long>() << '\n';
        return;
      }
      std::cout << "shape,count\n";
      for (const auto& row : out.at("shapes"))
        std::cout << csv_quote(row.at("shape").dump()) << ','
                  << row.at("count").get<long long>() << '\n';
      std::cout << "count," << out.at("count").get<long long>() << '\n';
      std::cout << "sum_of_squares," << out.at("sum_of_squares").get<long long>() << '\n';
      return;
    }
    // pretty
    if (kind == "dpartitions") {
      if (out.contains("shapes"))
        for (const auto& s : out.at("shapes")) std::cout << s.dump() << '\n';
      std::cout << "count " << out.at("count").get<long long>() << '\n';
      return;
    }
    for (const auto& row : out.at("shapes")) {
      std::cout << row.at("shape").dump() << "  count " << row.at("count").get<long long>() << '\n';
      if (!count_only)
        for (const auto& item : row.at(kind)) std::cout << "  " << item.dump() << '\n';
    }
    std::cout << "count " << out.at("count").get<long long>() << '\n';
    std::cout << "sum_of_squares " << out.at("sum_of_squares").get<long long>() << '\n';
  }
};

struct RepCmd {
  std::string shape_text;
  int d = 0;  // 0 = infer from the shape
  int n = -1;
  std::vector<int> xi_order;
  bool with_jm = false;
  bool with_verify = false;
  std::string format = "json";

  int run() const {
    const yhdn::DPartition shape =
        yhdn::dpartition_from_json(Json::parse(shape_text));
    const int dd = d == 0 ? shape.d() : d;
    if (shape.d() != dd)
      throw yhdn::BadParameters("--d disagrees with the shape's component count");
    if (n >= 0 && n != shape.size())
      throw yhdn::BadParameters("--n disagrees with the shape's size");

    const yhdn::XiOrder xi =
        xi_order.empty() ? yhdn::XiOrder(dd) : yhdn::XiOrder(dd, xi_order);
    const yhdn::Representation rep = yhdn::build_representation(dd, shape, xi);

    Json out{{"d", dd}, {"shape", yhdn::dpartition_json(shape)}, {"dim", rep.dim()}};
    Json tabs = Json::array();
    for (const auto& t : rep.tableaux()) tabs.push_back(yhdn::dtableau_json(t));
    out["tableaux"] = tabs;
    Json ts = Json::array(), gs = Json::array();
    for (int j = 1; j <= rep.n(); ++j) ts.push_back(yhdn::matrix_json(rep.t_matrix(j)));
    for (int i = 1; i + 1 <= rep.n(); ++i) gs.push_back(yhdn::matrix_json(rep.g_matrix(i)));
    out["t"] = ts;
    out["g"] = gs;
    if (with_jm) {
      Json jms = Json::array();
      for (const auto& m : yhdn::jm_matrices(rep)) jms.push_back(yhdn::matrix_json(m));
      out["jm"] = jms;
    }
    yhdn::Report report;
    if (with_verify) {
      report = yhdn::verify_relations(rep);
      out["verification"] = yhdn::report_json(report);
    }

    if (format == "json") {
      std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << "matrix,row,col,value\n";
      const auto dump_matrix = [&](const std::string& name, const yhdn::RepMatrix& m) {
        for (int r = 0; r < m.dim(); ++r)
          for (int c = 0; c < m.dim(); ++c)
            std::cout << name << ',' << r << ',' << c << ','
                      << csv_quote(m.at(r, c).str()) << '\n';
      };
      for (int j = 1; j <= rep.n(); ++j)
        dump_matrix("t" + std::to_string(j), rep.t_matrix(j));
      for (int i = 1; i + 1 <= rep.n(); ++i)
        dump_matrix("g" + std::to_string(i), rep.g_matrix(i));
      if (with_jm) {
        const auto jms = yhdn::jm_matrices(rep);
        for (std::size_t i = 0; i < jms.size(); ++i)
          dump_matrix("J" + std::to_string(i + 1), jms[i]);
      }
      if (with_verify) std::cout << "verification," << (report.all_pass() ? "pass" : "fail") << '\n';
    } else {
      std::cout << "shape " << shape.str() << "  dim " << rep.dim() << '\n';
      const auto show = [&](const std::string& name, const yhdn::RepMatrix& m) {
        std::cout << name << ":\n" << m.str();
      };
      for (int j = 1; j <= rep.n(); ++j) show("t" + std::to_string(j), rep.t_matrix(j));
      for (int i = 1; i + 1 <= rep.n(); ++i) show("g" + std::to_string(i), rep.g_matrix(i));
      if (with_jm) {
        const auto jms = yhdn::jm_matrices(rep);
        for (std::size_t i = 0; i < jms.size(); ++i)
          show("J" + std::to_string(i + 1), jms[i]);
      }
      if (with_verify) std::cout << report.str();
    }
    return with_verify && !report.all_pass() ? kExitVerifyFail : kExitOk;
  }
};

struct VerifyCmd {
  int d = 1;
  int n = 1;
  std::string suite;
  std::uint64_t budget = 2000;
  bool serial = false;
  std::string format = "pretty";

  int run() const {
    if (over_budget(d, n, budget)) {
      std::cerr << "rank d^n * n! exceeds the budget of " << budget
                << " basis words; raise --budget or YHDN_BUDGET to proceed\n";
      return kExitBudget;
    }
    const yhdn::Report report = yhdn::run_suite(
        suite, d, n, serial ? yhdn::ExecMode::serial : yhdn::ExecMode::parallel);
    if (format == "json") {
      Json out{{"suite", suite}, {"d", d}, {"n", n},
               {"report", yhdn::report_json(report)}};
      std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << "check,pass,witness\n";
      for (const auto& line : report.lines())
        std::cout << csv_quote(line.name) << ',' << (line.pass ? "1" : "0") << ','
                  << csv_quote(line.pass ? "" : line.detail) << '\n';
    } else {
      std::cout << "suite " << suite << " at d=" << d << " n=" << n << '\n'
                << report.str()
                << (report.all_pass() ? "all checks passed\n" : "checks FAILED\n");
    }
    return report.all_pass() ? kExitOk : kExitVerifyFail;
  }
};

struct SchurCmd {
  int d = 1;
  int n = 1;
  std::vector<long> at_q;  // [L, k]: evaluate at the k-th power of the L-th root
  std::string format = "pretty";

  int run() const {
    const auto shapes = yhdn::enumerate_dpartitions(d, n);
    if (at_q.empty()) {
      Json rows = Json::array();
      for (const auto& shape : shapes) {
        const yhdn::Laurent s = yhdn::schur_element(d, shape, yhdn::SchurForm::hook).value;
        const yhdn::Cyclotomic at_one = s.evaluate(yhdn::Cyclotomic(1));
        rows.push_back(Json{{"shape", yhdn::dpartition_json(shape)},
                            {"schur", yhdn::laurent_json(s)},
                            {"schur_str", s.str()},
                            {"schur_at_q1", at_one.as_rational().str()}});
      }
      if (format == "json") {
        std::cout << Json{{"d", d}, {"n", n}, {"elements", rows}}.dump(2) << '\n';
      } else if (format == "csv") {
        std::cout << "shape,schur,schur_at_q1\n";
        for (const auto& row : rows)
          std::cout << csv_quote(row.at("shape").dump()) << ','
                    << csv_quote(row.at("schur_str").get<std::string>()) << ','
                    << row.at("schur_at_q1").get<std::string>() << '\n';
      } else {
        for (const auto& row : rows)
          std::cout << row.at("shape").dump() << ": "
                    << row.at("schur_str").get<std::string>() << '\n';
      }
      return kExitOk;
    }

    const yhdn::Cyclotomic qbar =
        yhdn::Cyclotomic::root(static_cast<unsigned>(at_q.at(0)), at_q.at(1));
    const yhdn::SemisimplicityVerdict verdict = yhdn::semisimple_at(d, n, qbar);
    Json rows = Json::array();
    for (const auto& shape : shapes) {
      const yhdn::Cyclotomic value =
          yhdn::schur_element(d, shape, yhdn::SchurForm::hook).value.evaluate(qbar);
      rows.push_back(Json{{"shape", yhdn::dpartition_json(shape)},
                          {"value", yhdn::cyclotomic_json(value)},
                          {"value_str", value.str()}});
    }
    Json vanishing = Json::array();
    for (const auto& shape : verdict.vanishing)
      vanishing.push_back(yhdn::dpartition_json(shape));
    if (format == "json") {
      std::cout << Json{{"d", d}, {"n", n},
                        {"qbar", Json{{"order", at_q.at(0)}, {"power", at_q.at(1)}}},
                        {"values", rows},
                        {"semisimple", verdict.semisimple},
                        {"vanishing", vanishing}}
                       .dump(2)
                << '\n';
    } else if (format == "csv") {
      std::cout << "shape,value\n";
      for (const auto& row : rows)
        std::cout << csv_quote(row.at("shape").dump()) << ','
                  << csv_quote(row.at("value_str").get<std::string>()) << '\n';
      std::cout << "semisimple," << (verdict.semisimple ? "1" : "0") << '\n';
    } else {
      for (const auto& row : rows)
        std::cout << row.at("shape").dump() << ": "
                  << row.at("value_str").get<std::string>() << '\n';
      std::cout << (verdict.semisimple ? "semisimple" : "not semisimple") << '\n';
      for (const auto& shape : vanishing)
        std::cout << "vanishing " << shape.dump() << '\n';
    }
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the Yokonuma-Hecke algebra Y(d,n)"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv", "pretty"};

  EnumerateCmd enumerate;
  CLI::App* enum_app =
      app.add_subcommand("enumerate", "list shapes, standard tableaux or content arrays");
  enum_app->add_option("kind", enumerate.kind, "what to list")
      ->required()
      ->check(CLI::IsMember({"dpartitions", "tableaux", "content-arrays"}));
  enum_app->add_option("--d", enumerate.d, "number of framing values")->check(CLI::PositiveNumber);
  enum_app->add_option("--n", enumerate.n, "number of strands")->check(CLI::NonNegativeNumber);
  enum_app->add_flag("--count-only", enumerate.count_only, "print counts without the items");
  enum_app->add_option("--format", enumerate.format)->check(CLI::IsMember(formats));

  RepCmd rep;
  CLI::App* rep_app = app.add_subcommand("rep", "matrices of one irreducible representation");
  rep_app->add_option("--shape", rep.shape_text, "shape as nested JSON arrays")->required();
  rep_app->add_option("--d", rep.d, "number of framing values")->check(CLI::PositiveNumber);
  rep_app->add_option("--n", rep.n, "number of strands, must match the shape")
      ->check(CLI::NonNegativeNumber);
  rep_app->add_option("--xi-order", rep.xi_order, "relabelling of the d-th roots of unity")
      ->delimiter(',');
  rep_app->add_flag("--jm", rep.with_jm, "include the conjugated framing matrices");
  rep_app->add_flag("--verify", rep.with_verify, "append a relation verification report");
  rep_app->add_option("--format", rep.format)->check(CLI::IsMember(formats));

  VerifyCmd verify;
  CLI::App* verify_app = app.add_subcommand("verify", "run one verification suite");
  verify_app->add_option("--d", verify.d, "number of framing values")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_app->add_option("--n", verify.n, "number of strands")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_app->add_option("--suite", verify.suite, "which suite to run")
      ->required()
      ->check(CLI::IsMember(yhdn::suite_names()));
  verify_app->add_option("--budget", verify.budget, "largest allowed rank d^n * n!")
      ->envname("YHDN_BUDGET");
  verify_app->add_flag("--serial", verify.serial, "run checks on one worker");
  verify_app->add_option("--format", verify.format)->check(CLI::IsMember(formats));

  SchurCmd schur;
  CLI::App* schur_app = app.add_subcommand("schur", "Schur elements and semisimplicity");
  schur_app->add_option("--d", schur.d, "number of framing values")
      ->required()
      ->check(CLI::PositiveNumber);
  schur_app->add_option("--n", schur.n, "number of strands")
      ->required()
      ->check(CLI::PositiveNumber);
  schur_app->add_option("--at-q", schur.at_q, "evaluate at root of unity: order L, power k")
      ->expected(2);
  schur_app->add_option("--format", schur.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enum_app) return enumerate.run();
    if (*rep_app) return rep.run();
    if (*verify_app) return verify.run();
    return schur.run();
  } catch (const Json::exception& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
