#pragma once

#include <iosfwd>
#include <string>

#include "crosscycle/config.hpp"

namespace crosscycle {

// Process exit codes shared by the command layer and the executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitMismatch = 4;
inline constexpr int kExitUnverified = 5;

// Each command writes its table to cfg.out_path (stdout when empty, here
// the out stream) in cfg.format and reports problems on err. The returned
// value is the process exit code.

// Solves the crossing system and tabulates the admissible solutions.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Solves, then verifies every admissible solution by piecewise integration.
// Writes the figure to cfg.svg_path when set and at least one cycle
// verified. Returns kExitUnverified when any cycle fails.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Figure only: verify without the table. cfg.svg_path must be set.
int cmd_render(const RunConfig& cfg, std::ostream& err);

// Compares generated crossing polynomials against their closed forms on
// random draws. family is a family name or "all". Always exits 0; failures
// are report content.
int cmd_check_appendix(const RunConfig& cfg, const std::string& family, unsigned seed, int draws,
                       std::ostream& out, std::ostream& err);

// Re-derives the published solution tables. id is a registry id or "all".
// Prints a human table to out; writes a machine JSON report to cfg.out_path
// when set. Any mismatch yields kExitMismatch.
int cmd_reproduce(const RunConfig& cfg, const std::string& id, std::ostream& out,
                  std::ostream& err);

}  // namespace crosscycle
