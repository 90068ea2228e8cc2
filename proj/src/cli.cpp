#include "charforge/cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "charforge/partitions.hpp"
#include "charforge/symfun.hpp"

namespace charforge::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition_arg(const std::string& text, const char* flag) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Verification suites

class Tally {
public:
    Tally(std::string suite, std::ostream& out) : suite_(std::move(suite)), out_(out) {}

    void record(bool ok, const std::string& detail) {
        ++total_;
        if (!ok) ++failed_;
        out_ << (ok ? "PASS " : "FAIL ") << suite_ << ' ' << detail << '\n';
    }

    bool summarize(const std::string& what) {
        if (failed_ == 0)
            out_ << "PASS (" << total_ << ' ' << what << ", all equal)\n";
        else
            out_ << "FAIL (" << failed_ << " of " << total_ << ' ' << what << " failed)\n";
        return failed_ == 0;
    }

private:
    std::string suite_;
    std::ostream& out_;
    int total_ = 0;
    int failed_ = 0;
};

std::string label(const Partition& p) { return "(" + p.to_string() + ")"; }

bool verify_jt(int n, std::ostream& out) {
    Tally tally("jt", out);
    for (int m = 1; m <= 4; ++m) {
        const GenericMatrix a = GenericMatrix::generic(m);
        for (const Partition& lam : partitions_of(n)) {
            const Polynomial h_form = schur_jt(a, lam);
            const Polynomial e_form = schur_dual_jt(a, lam);
            bool balanced = true;
            for (const auto& [mono, c] : h_form.terms()) balanced = balanced && is_balanced(mono);
            tally.record(h_form == e_form && balanced,
                         "lambda=" + label(lam) + " m=" + std::to_string(m) + " terms=" +
                             std::to_string(h_form.term_count()) + (balanced ? "" : " unbalanced"));
        }
    }
    return tally.summarize("Jacobi-Trudi instances");
}

bool verify_mn_gj(int n, std::ostream& out) {
    Tally tally("mn-gj", out);
    const auto parts = partitions_of(n);
    MnEvaluator mn;
    for (const Partition& lam : parts)
        for (const Partition& mu : parts) {
            const Integer a = mn(lam, mu);
            const Integer b = chi_gj(lam, mu);
            std::string detail = "chi" + label(lam) + label(mu) + " mn=" + a.get_str() + " gj=" + b.get_str();
            bool ok = a == b;
            if (n <= 4) {
                const Integer c = chi_oracle(lam, Permutation::with_cycle_type(mu));
                detail += " oracle=" + c.get_str();
                ok = ok && a == c;
            }
            tally.record(ok, detail);
        }
    return tally.summarize("partition pairs");
}

bool verify_orthogonality(int n, std::ostream& out) {
    Tally tally("orthogonality", out);
    const CharacterTable table = character_table(n, kTableMaxN);
    for (const Partition& lam : table.mus)
        for (const Partition& mu : table.mus) {
            Integer sum(0);
            for (const Partition& rho : table.lambdas) sum += table.at(rho, lam) * table.at(rho, mu);
            const Integer expected = lam == mu ? Integer(static_cast<long>(z_of(CycleType::of(lam)))) : Integer(0);
            tally.record(sum == expected, "sum_rho chi" + label(lam) + " chi" + label(mu) + " = " + sum.get_str() +
                                              " expected " + expected.get_str());
        }
    return tally.summarize("class pairs");
}

bool verify_prop2(int n, std::ostream& out) {
    Tally tally("prop2", out);
    for (int l = 1; l <= n; ++l) {
        const std::vector<Polynomial> b = cycle_entries(l);
        const GenericMatrix a = companion_matrix(b);
        Polynomial product(1L);
        for (const auto& x : b) product *= x;
        for (int size = l; size <= n; ++size)
            for (const Partition& lam : partitions_of(size))
                for (const Partition& nu : subpartitions(lam)) {
                    if (lam.size() - nu.size() != l) continue;
                    const SkewShape s(lam, nu);
                    const bool strip = is_border_strip(s);
                    const Polynomial expected = strip ? (height(s) % 2 == 0 ? product : -product) : Polynomial{};
                    const Polynomial got = skew_schur(a, s);
                    tally.record(got == expected, "s" + label(lam) + "/" + label(nu) + " = " + got.to_string());
                }
    }
    return tally.summarize("skew shapes");
}

bool verify_prop3(int n, std::ostream& out) {
    Tally tally("prop3", out);
    const auto parts = partitions_of(n);
    MnEvaluator mn;
    for (const Partition& mu : parts) {
        const Permutation pi = Permutation::with_cycle_type(mu);
        for (const Partition& lam : parts) {
            const Integer e_coeff = coeff_e(lam, pi);
            const Integer e_inner = inner_e_p(lam, mu);
            tally.record(e_coeff == e_inner, "[a_pi]e" + label(lam) + " pi~" + label(mu) + " = " + e_coeff.get_str() +
                                                 " <e,p> = " + e_inner.get_str());
            const Integer s_coeff = chi_oracle(lam, pi);
            const Integer s_inner = mn(lam, mu);
            tally.record(s_coeff == s_inner, "[a_pi]s" + label(lam) + " pi~" + label(mu) + " = " + s_coeff.get_str() +
                                                 " <s,p> = " + s_inner.get_str());
        }
    }
    return tally.summarize("coefficient identities");
}

bool verify_psum(int n, std::ostream& out) {
    Tally tally("psum", out);
    const auto parts = partitions_of(n);
    for (const Partition& mu : parts) {
        const Permutation pi = Permutation::with_cycle_type(mu);
        for (const Partition& lam : parts) {
            const Integer got = coeff_p(lam, pi);
            const Integer expected = lam == mu ? Integer(static_cast<long>(z_of(CycleType::of(lam)))) : Integer(0);
            tally.record(got == expected, "[a_pi]p" + label(lam) + " pi~" + label(mu) + " = " + got.get_str() +
                                              " expected " + expected.get_str());
        }
    }
    return tally.summarize("power-sum coefficients");
}

struct Suite {
    int max_n;
    std::function<bool(int, std::ostream&)> run;
};

const std::map<std::string, Suite, std::less<>>& suites() {
    static const std::map<std::string, Suite, std::less<>> table = {
        {"jt", {5, verify_jt}},
        {"mn-gj", {8, verify_mn_gj}},
        {"orthogonality", {8, verify_orthogonality}},
        {"prop2", {8, verify_prop2}},
        {"prop3", {5, verify_prop3}},
        {"psum", {6, verify_psum}},
    };
    return table;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_char(const std::string& lam_text, const std::string& mu_text, const std::string& method, std::ostream& out) {
    const Partition lam = parse_partition_arg(lam_text, "--lambda");
    const Partition mu = parse_partition_arg(mu_text, "--mu");
    if (lam.size() != mu.size())
        throw InputError("|lambda| = " + std::to_string(lam.size()) + " but |mu| = " + std::to_string(mu.size()));
    Integer value;
    if (method == "mn") {
        value = chi_mn(lam, mu);
    } else if (method == "gj") {
        value = mu.empty() ? Integer(1) : chi_gj(lam, mu);
    } else {
        if (lam.size() > kOracleMaxN)
            throw BoundError("oracle method is limited to n <= " + std::to_string(kOracleMaxN));
        value = chi_oracle(lam, Permutation::with_cycle_type(mu));
    }
    out << value.get_str() << '\n';
    return kOk;
}

int cmd_table(int n, const std::string& format, std::ostream& out) {
    if (n < 1 || n > kTableMaxN) throw InputError("--n must be in 1.." + std::to_string(kTableMaxN));
    const CharacterTable table = character_table(n, kTableMaxN);
    out << (format == "json" ? format_table_json(table) : format_table_tsv(table));
    return kOk;
}

int cmd_immanant(const std::string& lam_text, const std::string& path, std::ostream& out) {
    const Partition lam = parse_partition_arg(lam_text, "--lambda");
    std::ifstream in(path);
    if (!in) throw InputError("cannot read matrix file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    MatrixFile file;
    try {
        file = MatrixFile::parse(buf.str());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
    if (file.m > kImmanantMaxN) throw InputError("matrix size exceeds " + std::to_string(kImmanantMaxN));
    if (lam.size() != file.m)
        throw InputError("|lambda| = " + std::to_string(lam.size()) + " but matrix is " + std::to_string(file.m) + "x" +
                         std::to_string(file.m));
    out << immanant(file.entries, lam, kImmanantMaxN).get_str() << '\n';
    return kOk;
}

int cmd_coeff(const std::string& lam_text, const std::string& mono_text, int m, std::ostream& out, std::ostream& err) {
    const Partition lam = parse_partition_arg(lam_text, "--lambda");
    if (m < 1) throw InputError("--m must be positive");
    if (m > kCoeffMaxN) throw BoundError("--m is limited to " + std::to_string(kCoeffMaxN));
    Monomial mono;
    try {
        mono = parse_monomial(mono_text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--monomial: ") + e.what());
    }
    for (const auto& [v, e] : mono.factors())
        if (v.row > m || v.col > m)
            throw InputError("--monomial: " + v.to_string() + " outside 1.." + std::to_string(m));
    if (!is_balanced(mono)) {
        err << "warning: " << mono.to_string() << " is not balanced; its coefficient in every Schur function is 0\n";
        out << "0\n";
        return kOk;
    }
    const Polynomial s = schur_jt(GenericMatrix::generic(m), lam);
    out << coeff_of(s, mono).get_str() << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, int n, std::ostream& out) {
    const auto it = suites().find(suite);
    if (it == suites().end()) throw InputError("unknown suite '" + suite + "'");
    if (n < 1 || n > it->second.max_n)
        throw InputError("suite " + suite + " accepts --n in 1.." + std::to_string(it->second.max_n));
    return it->second.run(n, out) ? kOk : kVerificationFailed;
}

}  // namespace

// ---------------------------------------------------------------------------
// Formats

MatrixFile MatrixFile::parse(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("entries"))
        throw std::invalid_argument("expected an object with keys \"m\" and \"entries\"");
    if (!doc["m"].is_number_integer()) throw std::invalid_argument("\"m\" must be an integer");
    MatrixFile file;
    file.m = doc["m"].get<int>();
    if (file.m < 1) throw std::invalid_argument("\"m\" must be positive");
    const auto& rows = doc["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != file.m)
        throw std::invalid_argument("\"entries\" must hold exactly m rows");
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != file.m)
            throw std::invalid_argument("every row must hold exactly m entries");
        auto& out_row = file.entries.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_string()) throw std::invalid_argument("entries must be decimal integer strings");
            const std::string& s = cell.get_ref<const std::string&>();
            const std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            bool ok = s.size() > digits;
            for (std::size_t i = digits; i < s.size() && ok; ++i) ok = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
            if (!ok) throw std::invalid_argument("'" + s + "' is not a decimal integer");
            out_row.emplace_back(s[0] == '+' ? s.substr(1) : s, 10);
        }
    }
    return file;
}

Monomial parse_monomial(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact == "1") return {};
    if (compact.empty()) throw std::invalid_argument("empty monomial");

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("monomial '" + std::string(text) + "': " + why + " at offset " + std::to_string(pos));
    };
    auto expect = [&](char c) {
        if (pos >= compact.size() || compact[pos] != c) throw fail(std::string("expected '") + c + "'");
        ++pos;
    };
    auto number = [&]() {
        int v = 0;
        const char* first = compact.data() + pos;
        const char* last = compact.data() + compact.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first || v < 1) throw fail("expected a positive integer");
        pos += static_cast<std::size_t>(ptr - first);
        return v;
    };

    std::vector<Monomial::Factor> factors;
    while (true) {
        expect('a');
        expect('[');
        const int i = number();
        expect(',');
        const int j = number();
        expect(']');
        unsigned e = 1;
        if (pos < compact.size() && compact[pos] == '^') {
            ++pos;
            e = static_cast<unsigned>(number());
        }
        factors.emplace_back(VarId::entry(i, j), e);
        if (pos == compact.size()) break;
        expect('*');
    }
    return Monomial::from_factors(std::move(factors));
}

std::string format_table_tsv(const CharacterTable& table) {
    std::string s;
    for (const Partition& mu : table.mus) s += '\t' + mu.to_string();
    s += '\n';
    for (const Partition& lam : table.lambdas) {
        s += lam.to_string();
        for (const Partition& mu : table.mus) s += '\t' + table.at(lam, mu).get_str();
        s += '\n';
    }
    return s;
}

std::string format_table_json(const CharacterTable& table) {
    nlohmann::ordered_json doc;
    doc["n"] = table.n;
    doc["columns"] = nlohmann::ordered_json::array();
    for (const Partition& mu : table.mus) doc["columns"].push_back(mu.to_string());
    doc["rows"] = nlohmann::ordered_json::array();
    for (const Partition& lam : table.lambdas) {
        nlohmann::ordered_json row;
        row["lambda"] = lam.to_string();
        row["values"] = nlohmann::ordered_json::array();
        for (const Partition& mu : table.mus) {
            const Integer& v = table.at(lam, mu);
            // character values of S_n for n <= 8 fit easily; fall back to a string otherwise
            if (v.fits_slong_p())
                row["values"].push_back(v.get_si());
            else
                row["values"].push_back(v.get_str());
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump() + "\n";
}

bool run_verify(std::string_view suite, int n, std::ostream& out) {
    const auto it = suites().find(suite);
    if (it == suites().end()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    if (n < 1 || n > it->second.max_n) throw std::out_of_range("suite n out of range");
    return it->second.run(n, out);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characters of the symmetric group, Schur coefficients and immanants", "charforge"};
    app.require_subcommand(1);

    std::string lam_text, mu_text, method = "mn", format = "tsv", matrix_path, mono_text, suite;
    int n = 0;
    int m = 0;

    auto* ch = app.add_subcommand("char", "Character value chi^lambda(mu)");
    ch->add_option("--lambda", lam_text, "Irreducible label, e.g. 2,2,2,1")->required();
    ch->add_option("--mu", mu_text, "Cycle type, e.g. 3,2,2")->required();
    ch->add_option("--method", method, "mn | gj | oracle")->check(CLI::IsMember({"mn", "gj", "oracle"}));

    auto* tb = app.add_subcommand("table", "Full character table of S_n");
    tb->add_option("--n", n, "Degree, 1..8")->required();
    tb->add_option("--format", format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));

    auto* im = app.add_subcommand("immanant", "Immanant of an integer matrix");
    im->add_option("--lambda", lam_text)->required();
    im->add_option("--matrix", matrix_path, "JSON matrix file")->required();

    auto* co = app.add_subcommand("coeff", "Coefficient of a monomial in s_lambda of a generic m x m matrix");
    co->add_option("--lambda", lam_text)->required();
    co->add_option("--monomial", mono_text, "e.g. a[1,2]*a[2,1]")->required();
    co->add_option("--m", m, "Matrix size")->required();

    auto* vf = app.add_subcommand("verify", "Run an identity verification suite");
    vf->add_option("--suite", suite, "jt | mn-gj | orthogonality | prop2 | prop3 | psum")->required();
    vf->add_option("--n", n)->required();

    std::vector<const char*> argv;
    argv.push_back("charforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*ch) return cmd_char(lam_text, mu_text, method, out);
        if (*tb) return cmd_table(n, format, out);
        if (*im) return cmd_immanant(lam_text, matrix_path, out);
        if (*co) return cmd_coeff(lam_text, mono_text, m, out, err);
        if (*vf) return cmd_verify(suite, n, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const BoundError& e) {
        err << "error: " << e.what() << '\n';
        return kBoundExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace charforge::cli
