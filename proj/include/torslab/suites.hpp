#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "torslab/kernels.hpp"
#include "torslab/presentation.hpp"
#include "torslab/silting.hpp"

namespace torslab {

enum class Status { Pass, Fail, WindowLimited };
std::string to_string(Status s);

struct Check {
  std::string claim;
  std::string statement;
  Status status = Status::Pass;
  nlohmann::json witness;
};

struct SuiteReport {
  std::string algebra;
  DimVector bound;
  int field = 2;
  std::string suite;
  std::vector<Check> checks;
  nlohmann::json summary = nlohmann::json::object();
  std::optional<double> seconds;

  void add(std::string claim, std::string statement, Status s, nlohmann::json witness = nullptr);
  /// 0 all pass, 1 any fail, 2 window-limited only.
  int exit_code() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  std::string algebra_id;
  std::string source;  // algebra file text, reloaded per field for scans
  int field = 0;       // 0: the file's own field
  DimVector bound;
  int depth = 10;
  int grid_lo = -4, grid_hi = 4;
  std::vector<int> fields;
  Exec exec = Exec::Parallel;
};

std::shared_ptr<const Algebra> load_for(const SuiteOptions& o, int field);

SuiteReport run_smalo(const SuiteOptions& o);
SuiteReport run_semistable(const SuiteOptions& o);
SuiteReport run_numdis(const SuiteOptions& o);
SuiteReport run_brickfinite(const SuiteOptions& o);
SuiteReport run_scan(const SuiteOptions& o);
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);

/// Counts at the bound and at the bound raised by one in every coordinate.
struct AmpleCertificate {
  DimVector next;
  int classes = 0, classes_next = 0;
  int bricks = 0, bricks_next = 0;
  bool next_exceeded = false;  // the raised window blew the enumeration budget
  bool stable() const { return !next_exceeded && classes == classes_next && bricks == bricks_next; }
};

AmpleCertificate ample_certificate(std::shared_ptr<const Algebra> alg, const DimVector& bound, Exec exec = Exec::Parallel);

/// Hom(X, Y) = 0 by sweeping every tuple of vertex matrices; throws IsoOverflow past the cap.
bool hom_vanishes_bruteforce(const Algebra& alg, const Representation& x, const Representation& y);

nlohmann::json subcat_json(const SubcatSet& s);
nlohmann::json catalogue_json(const std::string& id, const Catalogue& cat);
nlohmann::json lattice_json(const std::string& id, const Catalogue& cat, const std::vector<SubcatSet>& classes);
nlohmann::json fan_json(const std::string& id, const Algebra& alg, const MutationGraph& g);

}  // namespace torslab
