#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "utlab/acceptance.hpp"
#include "utlab/report.hpp"
#include "utlab/semigroup.hpp"
#include "utlab/ut_deciders.hpp"

namespace utlab {

/// The commands behind ut-lab. Each resolves its group address
/// ("catalog:NAME@DEGREE" or "file:PATH"), re-validates any failure witness
/// and leaves the command echo to the caller. Errors propagate as Error.
Report cmd_homog(const std::string& group, std::size_t i, std::size_t j);
Report cmd_ut(const std::string& group, std::size_t k, const UtBudget& budget = {});
Report cmd_regular_map(const std::string& group, const std::string& map);
Report cmd_regular_rank(const std::string& group, std::size_t rank,
                        RegularityMode mode = RegularityMode::Delegate, bool quasi = false);
Report cmd_agl(std::uint64_t p);
Report cmd_sieve(std::uint64_t limit);
Report cmd_verify(Suite suite, std::uint64_t seed = 1,
                  const std::function<void(const CriterionResult&)>& progress = {});

/// Parses arguments and runs one command. Returns the exit code:
/// 0 holds, 1 fails with a witness, 2 undecided or error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace utlab
