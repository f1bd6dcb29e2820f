// Command-line driver: read a group or table file, compute Schur indices for
// the selected characters, print a JSON document or a text table.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schur/cli.hpp"

namespace {

// --chars accepts "all", a comma-separated list of row indices, or "deg=<d>".
void apply_selector(const std::string& sel, schur::JobSpec& job) {
  if (sel == "all") {
    job.select = schur::JobSpec::Select::all;
    return;
  }
  if (sel.rfind("deg=", 0) == 0) {
    job.select = schur::JobSpec::Select::degree;
    job.degree = std::stoull(sel.substr(4));
    return;
  }
  job.select = schur::JobSpec::Select::indices;
  std::size_t pos = 0;
  while (pos < sel.size()) {
    std::size_t used = 0;
    job.indices.push_back(std::stoull(sel.substr(pos), &used));
    pos += used;
    if (pos < sel.size()) {
      if (sel[pos] != ',') throw std::invalid_argument(sel);
      ++pos;
    }
  }
  if (job.indices.empty()) throw std::invalid_argument(sel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur indices of irreducible characters of finite groups"};
  schur::JobSpec job;
  std::string chars = "all";
  std::string format = "json";

  app.add_option("input", job.input_path,
                 "group file (perm/pc) or character-table document")
      ->required();
  app.add_option("--chars", chars,
                 "character selection: all, row indices '3,5,9', or deg=<d>");
  app.add_flag("--faithful-only", job.faithful_only,
               "restrict to faithful characters");
  app.add_flag("--table-only", job.table_only,
               "use only the character table: bounds and counting, no search");
  app.add_flag("--verbose", job.verbose,
               "report trivial local indices too and keep fuller logs");
  app.add_option("--workers", job.workers, "number of parallel row workers");
  app.add_option("--seed", job.seed, "seed recorded in the report");
  app.add_option("--max-order", job.max_group_order,
                 "largest group order the input may enumerate");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  CLI11_PARSE(app, argc, argv);

  try {
    apply_selector(chars, job);
  } catch (const std::exception&) {
    std::cerr << "error: bad --chars value '" << chars << "'\n";
    return 1;
  }
  job.format = format == "text" ? schur::JobSpec::Format::text
                                : schur::JobSpec::Format::structured;

  try {
    schur::RunOutcome out = schur::run(job);
    if (job.format == schur::JobSpec::Format::text)
      std::cout << out.text;
    else
      std::cout << out.document.dump(2) << "\n";
    return out.exit_code;
  } catch (const schur::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
