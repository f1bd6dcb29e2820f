#pragma once

// Batch front end: a job description, a runner that fans rows out over a
// shared context, and report rendering (JSON document and text table).
// Reports depend only on the job and the input bytes, so repeated runs
// produce identical output.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "schur/engine.hpp"
#include "schur/io.hpp"

namespace schur {

struct JobSpec {
  std::string input_path;

  enum class Select { all, indices, degree } select = Select::all;
  std::vector<std::size_t> indices;  // used when select == indices
  u64 degree = 0;                    // used when select == degree
  bool faithful_only = false;

  enum class Format { structured, text } format = Format::structured;

  u64 max_group_order = Group::kDefaultMaxOrder;
  u64 max_subgroup_order = 0;  // 0: no limit on search candidates
  double time_budget = 0;      // seconds; 0: no limit
  u64 seed = 0;

  unsigned workers = 1;
  bool verbose = false;
  bool table_only = false;
};

struct RunOutcome {
  int exit_code = 0;  // 0 all resolved, 2 some rows open or skipped
  nlohmann::ordered_json document;
  std::string text;
};

namespace detail_cli {

struct RowSlot {
  std::size_t row = 0;
  bool skipped = false;
  std::optional<SchurIndexResult> result;
};

inline std::vector<std::size_t> select_rows(const CharacterTable& T,
                                            const JobSpec& job) {
  std::vector<std::size_t> rows;
  switch (job.select) {
    case JobSpec::Select::all:
      for (std::size_t i = 0; i < T.num_rows(); ++i) rows.push_back(i);
      break;
    case JobSpec::Select::indices:
      rows = job.indices;
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      for (auto i : rows)
        if (i >= T.num_rows())
          throw_domain("character index " + std::to_string(i) +
                       " outside the table (" +
                       std::to_string(T.num_rows()) + " rows)");
      break;
    case JobSpec::Select::degree:
      for (std::size_t i = 0; i < T.num_rows(); ++i)
        if (T.degree(i) == job.degree) rows.push_back(i);
      break;
  }
  if (job.faithful_only) {
    std::vector<std::size_t> kept;
    for (auto i : rows)
      if (is_faithful(T, i)) kept.push_back(i);
    rows = std::move(kept);
  }
  return rows;
}

inline void compute_rows(SchurContext& ctx, const EngineOptions& opt,
                         const JobSpec& job, std::vector<RowSlot>& slots) {
  std::atomic<std::size_t> cursor{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(job.time_budget));
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= slots.size()) return;
      if (job.time_budget > 0 &&
          std::chrono::steady_clock::now() >= deadline) {
        slots[i].skipped = true;
        continue;
      }
      try {
        slots[i].result = schur_index(ctx, slots[i].row, opt);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  unsigned nw = std::max(1u, job.workers);
  if (nw == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

inline const char* kind_name(GroupInput::Kind k) {
  switch (k) {
    case GroupInput::Kind::permutation:
      return "perm";
    case GroupInput::Kind::polycyclic:
      return "pc";
    case GroupInput::Kind::table:
      return "table";
  }
  return "?";
}

inline std::string field_text(const FieldSubgroup& reduced) {
  if (reduced.modulus <= 1) return "Q";
  std::string s = "Q(z" + std::to_string(reduced.modulus) + ")";
  if (reduced.elements.size() <= 1) return s;
  s += "^<";
  for (std::size_t i = 0; i < reduced.gens.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(reduced.gens[i]);
  }
  return s + ">";
}

inline nlohmann::ordered_json field_json(const FieldSubgroup& F) {
  FieldSubgroup red = reduced_to_conductor(F);
  nlohmann::ordered_json j;
  j["conductor"] = red.modulus;
  j["degree"] = red.field_degree();
  j["fixed_by"] = red.gens;
  j["description"] = field_text(red);
  return j;
}

inline nlohmann::ordered_json render_document(const CharacterTable& T,
                                              GroupInput::Kind kind,
                                              const JobSpec& job,
                                              bool table_mode,
                                              const std::vector<RowSlot>& slots) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json input;
  input["path"] = job.input_path;
  input["kind"] = kind_name(kind);
  input["mode"] = table_mode ? "table-only" : "full";
  input["group_order"] = T.group_order();
  input["classes"] = T.num_classes();
  input["exponent"] = T.exponent();
  doc["input"] = std::move(input);
  doc["seed"] = job.seed;

  nlohmann::ordered_json chars = nlohmann::ordered_json::array();
  std::size_t resolved = 0;
  for (const auto& s : slots) {
    nlohmann::ordered_json c;
    c["row"] = s.row;
    c["degree"] = T.degree(s.row);
    if (s.skipped || !s.result) {
      c["resolved"] = false;
      c["skipped"] = true;
      c["note"] = "time budget exhausted before this character";
      chars.push_back(std::move(c));
      continue;
    }
    const SchurIndexResult& r = *s.result;
    c["indicator"] = r.indicator;
    c["field"] = field_json(r.field);
    c["m_infinity"] = r.m_infinity;
    nlohmann::ordered_json locals = nlohmann::ordered_json::array();
    for (const auto& l : r.locals) {
      nlohmann::ordered_json e;
      e["p"] = l.p;
      e["m"] = l.value;
      e["exact"] = l.exact;
      locals.push_back(std::move(e));
    }
    c["locals"] = std::move(locals);
    c["m"] = r.total;
    c["resolved"] = r.resolved;
    nlohmann::ordered_json log = nlohmann::ordered_json::array();
    for (const auto& e : r.provenance) {
      nlohmann::ordered_json le;
      le["place"] = e.place;
      le["rule"] = e.tag;
      le["detail"] = e.detail;
      log.push_back(std::move(le));
    }
    c["provenance"] = std::move(log);
    if (r.resolved) ++resolved;
    chars.push_back(std::move(c));
  }
  doc["characters"] = std::move(chars);

  nlohmann::ordered_json summary;
  summary["characters"] = slots.size();
  summary["resolved"] = resolved;
  summary["unresolved"] = slots.size() - resolved;
  doc["summary"] = std::move(summary);
  return doc;
}

inline std::string render_text(const CharacterTable& T, GroupInput::Kind kind,
                               const JobSpec& job, bool table_mode,
                               const std::vector<RowSlot>& slots) {
  std::ostringstream os;
  os << "input " << job.input_path << " (" << kind_name(kind) << "), order "
     << T.group_order() << ", " << T.num_classes() << " classes, exponent "
     << T.exponent() << ", mode " << (table_mode ? "table-only" : "full")
     << ", seed " << job.seed << "\n";
  os << std::setw(5) << "row" << std::setw(6) << "deg" << std::setw(5) << "ind"
     << std::setw(6) << "m_oo" << std::setw(7) << "m"
     << "  locals / field / status\n";
  std::size_t resolved = 0;
  for (const auto& s : slots) {
    os << std::setw(5) << s.row << std::setw(6) << T.degree(s.row);
    if (s.skipped || !s.result) {
      os << std::setw(5) << "-" << std::setw(6) << "-" << std::setw(7) << "-"
         << "  skipped (time budget)\n";
      continue;
    }
    const SchurIndexResult& r = *s.result;
    os << std::setw(5)
       << (r.indicator > 0 ? "+1" : r.indicator < 0 ? "-1" : "0")
       << std::setw(6) << r.m_infinity << std::setw(7)
       << (r.resolved ? std::to_string(r.total)
                      : "<=" + std::to_string(r.total))
       << "  ";
    for (const auto& l : r.locals)
      os << l.p << ":" << (l.exact ? "" : "<=") << l.value << " ";
    os << " " << field_text(reduced_to_conductor(r.field));
    os << "  " << (r.resolved ? "resolved" : "open") << "\n";
    if (job.verbose)
      for (const auto& e : r.provenance)
        os << "        [" << e.place << "] " << e.tag << ": " << e.detail
           << "\n";
    if (r.resolved) ++resolved;
  }
  os << resolved << "/" << slots.size() << " resolved\n";
  return os.str();
}

}  // namespace detail_cli

inline RunOutcome run(const JobSpec& job) {
  GroupInput gi = read_group_file(job.input_path, job.max_group_order);
  auto make_context = [&]() -> SchurContext {
    if (gi.group) return SchurContext(*gi.group);
    return SchurContext(std::move(*gi.table));
  };
  SchurContext ctx = make_context();
  const CharacterTable& T = ctx.table();

  bool table_mode = job.table_only || !ctx.attached();
  EngineOptions opt;
  opt.verbose = job.verbose;
  opt.max_subgroup_order = job.max_subgroup_order;
  opt.table_only = table_mode;

  std::vector<detail_cli::RowSlot> slots;
  for (auto r : detail_cli::select_rows(T, job)) slots.push_back({r});
  detail_cli::compute_rows(ctx, opt, job, slots);

  RunOutcome out;
  out.document = detail_cli::render_document(T, gi.kind, job, table_mode, slots);
  out.text = detail_cli::render_text(T, gi.kind, job, table_mode, slots);
  bool all_resolved = true;
  for (const auto& s : slots)
    all_resolved = all_resolved && !s.skipped && s.result && s.result->resolved;
  out.exit_code = all_resolved ? 0 : 2;
  return out;
}

}  // namespace schur
