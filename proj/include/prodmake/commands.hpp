#ifndef PRODMAKE_COMMANDS_HPP
#define PRODMAKE_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <prodmake/convert.hpp>
#include <prodmake/partitions.hpp>

namespace prodmake::cli
{

enum class Command { prodmake, seriesmake, qanalogue, verify };
enum class Format { json, table };

inline constexpr std::size_t kDefaultOrder = 20;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitNetwork = 4;

struct RunConfig {
    Command command = Command::prodmake;
    // Defaults to kDefaultOrder, or to the length of a --coeffs/--exps list.
    std::optional<std::size_t> order;
    // Exactly one input source; verify also runs with none.
    std::optional<std::string> expr;
    std::optional<std::string> coeffs;
    std::optional<std::string> exps;
    std::optional<std::string> family;
    Method method = Method::both;
    Format format = Format::json;
    bool offline = false;
    bool oeis = false;
    std::size_t max_partition_size = kDefaultPartitionGuard;
    // Coefficients shown per r_q(n) polynomial; 0 shows all.
    std::size_t q_terms = 0;
};

struct Report {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

std::optional<Command> parse_command(std::string_view name);
std::optional<Method> parse_method(std::string_view name);
std::optional<Format> parse_format(std::string_view name);
std::string_view command_name(Command c);

// Runs one command. Never throws: failures become an exit code plus a
// message in Report::err.
Report run(const RunConfig &config);

} // namespace prodmake::cli

#endif
