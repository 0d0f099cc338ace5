#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace striptr::cli {

enum ExitCode : int { ok = 0, failure = 1, invalid = 2, mismatch = 3, exhausted = 4 };

enum class RouteChoice { closed, residue, tr, all };
enum class Suite { lemmas, routes, product, tr };

struct Streams {
    std::ostream &out;
    std::ostream &err;
};

int run_validate(const RunConfig &cfg, Streams io);
int run_free_energy(const RunConfig &cfg, RouteChoice route, Streams io);
int run_bps_table(const RunConfig &cfg, Streams io);
/// log Z by default; with dt, the coefficients of Z itself.
int run_z_series(const RunConfig &cfg, bool dt, Streams io);
int run_verify(const RunConfig &cfg, Suite suite, Streams io);

/// Maps library exceptions onto exit codes, writing the message to err.
int report_exception(std::ostream &err);

} // namespace striptr::cli
