#include "nilrep/tables.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "nilrep/affine.hpp"
#include "nilrep/catalog.hpp"
#include "nilrep/dual.hpp"
#include "nilrep/quotient.hpp"
#include "nilrep/regular.hpp"

namespace nilrep {

namespace {

using std::nullopt;

PublishedEntry entry(Algorithm a, std::optional<std::size_t> dim, std::optional<double> seconds) {
  return {a, dim, seconds};
}

}  // namespace

std::vector<PublishedRow> published_rows(int which) {
  std::vector<PublishedRow> rows;
  if (which == 1) {
    struct T1 {
      const char* field;
      std::size_t n, dim, reg, dual, aff;
      double t_reg, t_dual, t_aff;
    };
    const T1 data[] = {
        {"GF(2)", 4, 6, 7, 5, 7, 0.0, 0.1, 0.0},     {"GF(2)", 5, 10, 15, 11, 11, 0.25, 0.3, 0.3},
        {"GF(2)", 6, 15, 35, 17, 16, 3.4, 3.6, 3.5}, {"GF(2)", 7, 21, 79, 35, 22, 65, 66, 45},
        {"GF(3)", 4, 6, 7, 5, 7, 0.0, 0.0, 0.0},     {"GF(3)", 5, 10, 15, 11, 11, 0.2, 0.3, 0.3},
        {"GF(3)", 6, 15, 35, 17, 16, 3.4, 3.6, 3.7}, {"GF(3)", 7, 21, 79, 35, 22, 65, 67, 46},
        {"Q", 4, 6, 7, 5, 7, 0.0, 0.0, 0.0},         {"Q", 5, 10, 15, 11, 11, 0.2, 0.3, 0.3},
        {"Q", 6, 15, 35, 17, 16, 3.0, 3.2, 3.6},     {"Q", 7, 21, 79, 35, 22, 66, 67, 45},
    };
    for (const auto& r : data) {
      PublishedRow row;
      row.table = 1;
      row.field = Field::parse(r.field);
      row.label = "U_" + std::to_string(r.n) + "(" + row.field.to_string() + ")";
      row.catalog = "utri:" + std::to_string(r.n);
      row.algebra_dim = r.dim;
      row.entries = {entry(Algorithm::Regular, r.reg, r.t_reg), entry(Algorithm::Dual, r.dual, r.t_dual),
                     entry(Algorithm::Affine, r.aff, r.t_aff)};
      rows.push_back(row);
    }
  } else if (which == 2) {
    struct T2 {
      std::size_t n, c, dim, reg, dual;
      std::optional<std::size_t> aff;
      double t_reg, t_dual;
      std::optional<double> t_aff;
    };
    const T2 data[] = {
        {2, 5, 14, 20, 20, 15, 0.2, 0.3, 0.5},          {2, 6, 23, 34, 34, 24, 0.9, 1.3, 8.4},
        {2, 7, 41, 65, 65, nullopt, 3.2, 4.8, nullopt}, {2, 8, 71, 117, 117, nullopt, 14, 21, nullopt},
        {3, 4, 32, 41, 41, 33, 0.8, 1.7, 54},           {3, 5, 80, 113, 113, nullopt, 11.5, 17.5, nullopt},
        {4, 3, 30, 36, 36, 31, 0.9, 1.3, 37},           {4, 4, 90, 113, 113, nullopt, 13, 19.7, nullopt},
    };
    for (const auto& r : data) {
      PublishedRow row;
      row.table = 2;
      row.field = Field::rationals();
      row.label = "N_" + std::to_string(r.n) + "," + std::to_string(r.c) + "(Q)";
      row.catalog = "freenilp:" + std::to_string(r.n) + "," + std::to_string(r.c);
      row.algebra_dim = r.dim;
      row.entries = {entry(Algorithm::Regular, r.reg, r.t_reg), entry(Algorithm::Dual, r.dual, r.t_dual),
                     entry(Algorithm::Affine, r.aff, r.t_aff)};
      rows.push_back(row);
    }
  } else if (which == 3) {
    struct T3 {
      std::size_t n, reg, quo, dual;
      double t_reg, t_quo, t_dual;
    };
    const T3 data[] = {
        {13, 85, 43, 43, 8.6, 14, 12.3},      {14, 105, 53, 53, 17, 28, 24.7},
        {15, 145, 64, 64, 33, 63, 50},        {16, 185, 77, 77, 64, 125, 102},
        {17, 256, 94, 94, 123, 323, 218},     {18, 316, 111, 111, 234, 731, 461},
        {19, 433, 134, 134, 487, 1844, 1162}, {20, 538, 158, 158, 920, 4009, 3039},
    };
    for (const auto& r : data) {
      PublishedRow row;
      row.table = 3;
      row.field = Field::rationals();
      row.label = "f_" + std::to_string(r.n);
      row.catalog = "filiform:" + std::to_string(r.n);
      row.algebra_dim = r.n;
      row.entries = {entry(Algorithm::Regular, r.reg, r.t_reg), entry(Algorithm::Quotient, r.quo, r.t_quo),
                     entry(Algorithm::Dual, r.dual, r.t_dual), entry(Algorithm::Affine, nullopt, nullopt)};
      rows.push_back(row);
    }
  } else {
    throw std::invalid_argument("tables: expected 1, 2 or 3");
  }
  return rows;
}

RowOutcome run_row(const PublishedRow& row, const TableOptions& options) {
  RowOutcome out;
  out.row = row;
  const LieAlgebra g = catalog_algebra(row.catalog, row.field);
  out.algebra_dim = g.dim();
  for (const auto& e : row.entries) {
    ColumnOutcome col;
    col.algorithm = e.algorithm;
    col.published_dim = e.dim;
    col.published_seconds = e.seconds;
    const auto start = std::chrono::steady_clock::now();
    std::optional<Representation> rep;
    std::string fail_note;
    switch (e.algorithm) {
      case Algorithm::Regular: rep = algorithm_regular(g); break;
      case Algorithm::Quotient: rep = algorithm_quotient(g); break;
      case Algorithm::Dual: rep = algorithm_dual(g); break;
      case Algorithm::Affine: {
        AffineOptions ao;
        ao.seed = options.seed;
        ao.retries = options.retries;
        ao.time_limit = options.affine_time_limit;
        AffineOutcome res = algorithm_affine(g, ao);
        rep = std::move(res.rep);
        if (!rep)
          fail_note = res.reason + " after " + std::to_string(res.attempts) + " attempt(s), deepest step " +
                      std::to_string(res.deepest_step) + " of " + std::to_string(g.dim());
        break;
      }
      default: throw std::logic_error("run_row: unsupported algorithm");
    }
    col.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rep) {
      col.dim = rep->module_dim;
      col.verified = is_homomorphism(*rep) && is_faithful(*rep);
    }

    const bool affine = e.algorithm == Algorithm::Affine;
    if (rep && !col.verified) {
      col.status = "INVALID";
      col.is_diff = true;
    } else if (!affine) {
      if (*col.dim == *e.dim) {
        col.status = "MATCH";
      } else {
        col.status = "DIFF(" + std::to_string(*col.dim) + "," + std::to_string(*e.dim) + ")";
        col.is_diff = true;
      }
    } else if (e.dim) {
      if (!rep) {
        col.status = "AFFINE-FAIL";
        col.note = fail_note + "; the published run succeeded";
        col.is_diff = true;
      } else if (*col.dim == *e.dim) {
        col.status = "MATCH";
      } else {
        col.status = "DIFF(" + std::to_string(*col.dim) + "," + std::to_string(*e.dim) + ")";
        col.is_diff = true;
      }
    } else {
      if (!rep) {
        col.status = "AFFINE-FAIL";
        col.note = fail_note + "; the published run failed too";
      } else if (*col.dim == g.dim() + 1) {
        col.status = row.table == 3 ? "FINDING" : "AFFINE-OK";
        col.note = row.table == 3 ? "Affine succeeded where no faithful module of dimension n+1 was expected"
                                  : "succeeded where the published run failed";
      } else {
        col.status = "DIFF(" + std::to_string(*col.dim) + ",d+1)";
        col.is_diff = true;
      }
    }
    out.columns.push_back(std::move(col));
  }
  return out;
}

std::vector<RowOutcome> run_table(int which, const TableOptions& options) {
  const auto rows = published_rows(which);
  std::vector<RowOutcome> out(rows.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rows.size());
  auto worker = [&] {
    for (std::size_t k; (k = next++) < rows.size();) {
      try {
        out[k] = run_row(rows[k], options);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, rows.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string format_row(const RowOutcome& r) {
  std::string line = r.row.label + " dim=" + std::to_string(r.algebra_dim);
  if (r.algebra_dim != r.row.algebra_dim) line += " (published " + std::to_string(r.row.algebra_dim) + ")";
  for (const auto& c : r.columns) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3fs", c.seconds);
    line += " | " + to_string(c.algorithm) + ": ";
    line += c.dim ? std::to_string(*c.dim) : std::string("fail");
    line += " [" + c.status + "] " + secs;
    if (c.published_seconds) {
      char ps[32];
      std::snprintf(ps, sizeof ps, " (published %.2fs)", *c.published_seconds);
      line += ps;
    }
    if (!c.note.empty()) line += " {" + c.note + "}";
  }
  return line;
}

std::size_t diff_count(const std::vector<RowOutcome>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.algebra_dim != r.row.algebra_dim) ++n;
    for (const auto& c : r.columns) n += c.is_diff ? 1 : 0;
  }
  return n;
}

}  // namespace nilrep
