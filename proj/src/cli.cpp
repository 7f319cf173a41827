#include "ellarr/cli.hpp"

#include "ellarr/arrangement.hpp"
#include "ellarr/cohomology.hpp"
#include "ellarr/dga.hpp"
#include "ellarr/input.hpp"
#include "ellarr/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <ostream>

namespace ellarr::cli {

namespace {

using nlohmann::json;

json indices_json(IndexSet s) {
  json out = json::array();
  for (std::size_t i : s.elements()) out.push_back(i + 1);
  return out;
}

json flats_json(const Dga& dga) {
  json out = json::array();
  const FlatPoset& poset = dga.flats();
  for (std::size_t id = 0; id < poset.size(); ++id) {
    out.push_back({{"indices", indices_json(poset[id].indices)},
                   {"rank", poset[id].rank},
                   {"mobius", poset.mobius(id)},
                   {"nbc", dga.nbc(id).size()}});
  }
  return out;
}

json table_json(const Dga& dga, const HodgeTable& table) {
  json doc;
  doc["n"] = dga.arrangement().dim();
  doc["l"] = dga.arrangement().size();
  doc["flats"] = flats_json(dga);
  json hodge = json::array();
  for (const auto& [key, dim] : table.entries()) hodge.push_back({key.first, key.second, dim});
  doc["hodge"] = hodge;
  doc["poincare"] = poincare(table);
  doc["euler"] = table.euler();
  return doc;
}

void print_flats(std::ostream& out, const Dga& dga) {
  const FlatPoset& poset = dga.flats();
  out << "flats: " << poset.size() << "\n";
  for (std::size_t id = 0; id < poset.size(); ++id) {
    out << "  F" << id << "  indices=" << to_label(poset[id].indices) << "  rank=" << poset[id].rank
        << "  mobius=" << poset.mobius(id) << "  nbc=" << dga.nbc(id).size() << "\n";
  }
}

void print_table(std::ostream& out, const Dga& dga, const HodgeTable& table) {
  out << "n = " << dga.arrangement().dim() << ", l = " << dga.arrangement().size() << "\n";
  out << "dim gr_j H^i:\n";
  for (const auto& [key, dim] : table.entries())
    out << "  i=" << key.first << " j=" << key.second << "  " << dim << "\n";
  out << "H(t,u) = " << table.render_hodge() << "\n";
  out << "P(t) = " << table.render_poincare() << "\n";
  out << "euler = " << table.euler() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of unimodular elliptic arrangements"};
  app.require_subcommand(1);
  std::string file;
  bool as_json = false;
  int threads = 0;

  auto* validate = app.add_subcommand("validate", "Check an arrangement file");
  validate->add_option("FILE", file, "Input document, or - for stdin")->required();
  auto* flats = app.add_subcommand("flats", "List flats with rank, Mobius value and NBC count");
  flats->add_option("FILE", file)->required();
  flats->add_flag("--json", as_json);
  auto* cohomology = app.add_subcommand("cohomology", "Weight-graded cohomology of the complement");
  cohomology->add_option("FILE", file)->required();
  cohomology->add_flag("--json", as_json);
  cohomology->add_option("--threads", threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computation (testing)");
  oracle_cmd->add_option("FILE", file)->required();
  oracle_cmd->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  ArrangementSpec spec;
  try {
    spec = read_input_file(file);
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kParseError;
  }

  try {
    Arrangement arr = Arrangement::validate(spec);
    if (validate->parsed()) {
      out << "valid: n=" << arr.dim() << " l=" << arr.size() << " rank=" << arr.subset_rank(arr.all())
          << " flats=" << arr.flats().size() << " circuits=" << arr.circuits().size() << "\n";
      return kSuccess;
    }
    const Dga dga(std::move(arr));
    if (flats->parsed()) {
      if (as_json) {
        json doc{{"n", dga.arrangement().dim()}, {"l", dga.arrangement().size()}, {"flats", flats_json(dga)}};
        out << doc.dump(2) << "\n";
      } else {
        print_flats(out, dga);
      }
      return kSuccess;
    }

    HodgeTable table;
    if (oracle_cmd->parsed()) {
      table = oracle::oracle_hodge_table(spec);
    } else {
      if (threads > 0) omp_set_num_threads(threads);
      table = hodge_table(dga, Exec::parallel);
    }
    if (as_json) {
      out << table_json(dga, table).dump(2) << "\n";
    } else {
      print_table(out, dga, table);
    }
    return kSuccess;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  } catch (const oracle::TooLarge& e) {
    err << "error: TooLarge: " << e.what() << "\n";
    return kRejected;
  }
}

}  // namespace ellarr::cli
