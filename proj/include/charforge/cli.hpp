#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "charforge/characters.hpp"
#include "charforge/polyring.hpp"

namespace charforge::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kBoundExceeded = 3,
};

inline constexpr int kOracleMaxN = 7;
inline constexpr int kTableMaxN = 8;
inline constexpr int kImmanantMaxN = 8;
inline constexpr int kCoeffMaxN = 8;

/// Square integer matrix read from {"m": 3, "entries": [["1","2","3"], ...]}.
struct MatrixFile {
    int m = 0;
    std::vector<std::vector<Integer>> entries;

    /// Throws std::invalid_argument on anything malformed, including bare JSON numbers.
    static MatrixFile parse(std::string_view json_text);
};

/// "a[1,1]*a[2,2]^2"; the literal "1" is the empty monomial.
Monomial parse_monomial(std::string_view text);

std::string format_table_tsv(const CharacterTable& table);
std::string format_table_json(const CharacterTable& table);

/// Runs one verification suite, writing a line per instance and a summary.
/// Returns true iff every instance passed. Throws std::out_of_range when n is
/// outside the suite's bounds.
bool run_verify(std::string_view suite, int n, std::ostream& out);

/// Entry point shared by the charforge binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charforge::cli
