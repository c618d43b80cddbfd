#include "eprb/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "eprb/quad_solver.hpp"
#include "eprb/statistics.hpp"

namespace eprb {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_u64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(v));
    return buf;
}

// Record values must not contain whitespace or '='; escape the few
// characters that could break the key=value format.
std::string escape_value(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '%': out += "%25"; break;
            case ' ': out += "%20"; break;
            case '=': out += "%3D"; break;
            case '\t': out += "%09"; break;
            case '\n': out += "%0A"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string unescape_value(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            const std::string hex = s.substr(i + 1, 2);
            out += static_cast<char>(std::strtol(hex.c_str(), nullptr, 16));
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    return fields;
}

bool parse_long(const std::string& s, long& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtol(t.c_str(), &end, 10);
    return end == t.c_str() + t.size();
}

}  // namespace

// ---------------------------------------------------------------------------
// Pairs files
// ---------------------------------------------------------------------------

ExperimentData load_experiment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    ExperimentData data;
    for (int s = 0; s < 4; ++s) data.sets[s].setting = kSettings[s];

    std::string line;
    long line_no = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#') continue;

        const bool first_content = !saw_content;
        saw_content = true;
        if (first_content && content.find_first_of("0123456789+-") != 0) continue;  // header

        const auto fields = split(content, ',');
        if (fields.size() != 3)
            throw ParseError("expected 3 comma-separated fields, got " +
                                 std::to_string(fields.size()) + " (line " +
                                 std::to_string(line_no) + ")",
                             line_no);
        long setting = 0, a = 0, b = 0;
        if (!parse_long(fields[0], setting))
            throw ParseError("bad setting field '" + trim(fields[0]) + "' (line " +
                                 std::to_string(line_no) + ")",
                             line_no);
        if (setting < 1 || setting > 4)
            throw ParseError("setting must be 1..4, got " + std::to_string(setting) +
                                 " (line " + std::to_string(line_no) + ")",
                             line_no);
        if (!parse_long(fields[1], a) || !parse_long(fields[2], b))
            throw ParseError("bad outcome field (line " + std::to_string(line_no) + ")",
                             line_no);
        if ((a != 1 && a != -1) || (b != 1 && b != -1))
            throw BadOutcome("outcome outside {+1,-1} at line " + std::to_string(line_no));
        data.sets[setting - 1].pairs.push_back(
            {static_cast<std::int8_t>(a), static_cast<std::int8_t>(b)});
    }
    return validate_experiment(std::move(data));
}

void save_experiment_file(const ExperimentData& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "setting,a,b\n";
    for (int s = 0; s < 4; ++s) {
        for (const OutcomePair& p : data.sets[s].pairs) {
            char buf[24];
            std::snprintf(buf, sizeof buf, "%d,%+d,%+d\n", s + 1, static_cast<int>(p.a),
                          static_cast<int>(p.b));
            out << buf;
        }
    }
    if (!out) throw IoError("write failed for " + path);
}

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

namespace {

void append_kv(std::string& line, const char* key, const std::string& value) {
    line += ' ';
    line += key;
    line += '=';
    line += value;
}

}  // namespace

void write_records(const std::vector<TrialReport>& reports, std::ostream& os) {
    os << "# eprb records v1\n";
    for (const TrialReport& r : reports) {
        os << "# timing trial=" << r.trial << " wall_ms=" << fmt_double(r.wall_ms) << "\n";

        std::string line = "record";
        append_kv(line, "trial", std::to_string(r.trial));
        append_kv(line, "run_id", escape_value(r.run_id));
        append_kv(line, "source", escape_value(r.source));
        append_kv(line, "rng", escape_value(r.rng_name));
        append_kv(line, "kind", escape_value(r.kind));
        append_kv(line, "seed", fmt_u64(r.seed));
        append_kv(line, "n_pairs", fmt_u64(r.n_pairs));
        for (int i = 0; i < 4; ++i)
            append_kv(line, (std::string("coeff") + char('1' + i)).c_str(),
                      fmt_double(r.coeff[i]));
        append_kv(line, "N", fmt_u64(r.n_common));
        for (int i = 0; i < 4; ++i)
            append_kv(line, (std::string("C") + char('1' + i)).c_str(),
                      fmt_double(r.correlation[i]));
        append_kv(line, "c_plus", fmt_double(r.c_plus));
        append_kv(line, "c_minus", fmt_double(r.c_minus));
        append_kv(line, "s_chsh", fmt_double(r.s_chsh));
        append_kv(line, "negated_slot", std::to_string(r.negated_slot));
        append_kv(line, "k_max", fmt_u64(r.k_max));
        append_kv(line, "delta", fmt_double(r.delta));
        append_kv(line, "bound", fmt_double(r.bound));
        append_kv(line, "lp_value", fmt_double(r.lp_value));
        append_kv(line, "method", escape_value(r.method));
        append_kv(line, "ok_c_plus", r.ok_c_plus ? "1" : "0");
        append_kv(line, "ok_c_minus", r.ok_c_minus ? "1" : "0");
        append_kv(line, "ok_s_chsh", r.ok_s_chsh ? "1" : "0");
        append_kv(line, "chsh2_case", r.chsh2_applicable ? "1" : "0");
        append_kv(line, "ok_chsh2", r.ok_chsh2 ? "1" : "0");
        os << line << "\n";

        if (r.counts) {
            for (int s = 0; s < 4; ++s) {
                std::string cline = "counts";
                append_kv(cline, "trial", std::to_string(r.trial));
                append_kv(cline, "setting", std::to_string(s + 1));
                append_kv(cline, "pp", fmt_u64(r.counts->counts[s][0][0]));
                append_kv(cline, "pm", fmt_u64(r.counts->counts[s][0][1]));
                append_kv(cline, "mp", fmt_u64(r.counts->counts[s][1][0]));
                append_kv(cline, "mm", fmt_u64(r.counts->counts[s][1][1]));
                os << cline << "\n";
            }
        }
    }
}

void write_records_file(const std::vector<TrialReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    write_records(reports, out);
    if (!out) throw IoError("write failed for " + path);
}

namespace {

using KvMap = std::map<std::string, std::string>;

KvMap parse_kv(const std::vector<std::string>& tokens, std::size_t first, long line_no) {
    KvMap kv;
    for (std::size_t i = first; i < tokens.size(); ++i) {
        const auto pos = tokens[i].find('=');
        if (pos == std::string::npos)
            throw ParseError("expected key=value, got '" + tokens[i] + "' (line " +
                                 std::to_string(line_no) + ")",
                             line_no);
        kv[tokens[i].substr(0, pos)] = unescape_value(tokens[i].substr(pos + 1));
    }
    return kv;
}

const std::string& require(const KvMap& kv, const std::string& key, long line_no) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw ParseError("missing key '" + key + "' (line " + std::to_string(line_no) + ")",
                         line_no);
    return it->second;
}

double to_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }
std::uint64_t to_u64(const std::string& s) { return std::strtoull(s.c_str(), nullptr, 10); }

}  // namespace

std::vector<TrialReport> read_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::vector<TrialReport> reports;
    std::map<int, double> timings;
    std::map<int, std::array<std::array<std::array<std::uint64_t, 2>, 2>, 4>> cells;
    std::map<int, int> cells_seen;

    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty()) continue;

        std::vector<std::string> tokens;
        {
            std::istringstream ts(content);
            std::string tok;
            while (ts >> tok) tokens.push_back(tok);
        }

        if (content[0] == '#') {
            // Timing comments restore the wall-clock field; everything else
            // under '#' is ignored.
            if (tokens.size() >= 2 && tokens[1] == "timing") {
                const KvMap kv = parse_kv(tokens, 2, line_no);
                timings[static_cast<int>(to_u64(require(kv, "trial", line_no)))] =
                    to_double(require(kv, "wall_ms", line_no));
            }
            continue;
        }

        if (tokens[0] == "record") {
            const KvMap kv = parse_kv(tokens, 1, line_no);
            TrialReport r;
            r.trial = static_cast<int>(to_u64(require(kv, "trial", line_no)));
            r.run_id = require(kv, "run_id", line_no);
            r.source = require(kv, "source", line_no);
            r.rng_name = require(kv, "rng", line_no);
            r.kind = require(kv, "kind", line_no);
            r.seed = to_u64(require(kv, "seed", line_no));
            r.n_pairs = to_u64(require(kv, "n_pairs", line_no));
            for (int i = 0; i < 4; ++i)
                r.coeff[i] = to_double(require(kv, std::string("coeff") + char('1' + i), line_no));
            r.n_common = to_u64(require(kv, "N", line_no));
            for (int i = 0; i < 4; ++i)
                r.correlation[i] =
                    to_double(require(kv, std::string("C") + char('1' + i), line_no));
            r.c_plus = to_double(require(kv, "c_plus", line_no));
            r.c_minus = to_double(require(kv, "c_minus", line_no));
            r.s_chsh = to_double(require(kv, "s_chsh", line_no));
            r.negated_slot = static_cast<int>(to_u64(require(kv, "negated_slot", line_no)));
            r.k_max = to_u64(require(kv, "k_max", line_no));
            r.delta = to_double(require(kv, "delta", line_no));
            r.bound = to_double(require(kv, "bound", line_no));
            r.lp_value = to_double(require(kv, "lp_value", line_no));
            r.method = require(kv, "method", line_no);
            r.ok_c_plus = require(kv, "ok_c_plus", line_no) == "1";
            r.ok_c_minus = require(kv, "ok_c_minus", line_no) == "1";
            r.ok_s_chsh = require(kv, "ok_s_chsh", line_no) == "1";
            r.chsh2_applicable = require(kv, "chsh2_case", line_no) == "1";
            r.ok_chsh2 = require(kv, "ok_chsh2", line_no) == "1";
            reports.push_back(std::move(r));
        } else if (tokens[0] == "counts") {
            const KvMap kv = parse_kv(tokens, 1, line_no);
            const int trial = static_cast<int>(to_u64(require(kv, "trial", line_no)));
            const int s = static_cast<int>(to_u64(require(kv, "setting", line_no))) - 1;
            if (s < 0 || s > 3)
                throw ParseError("counts setting out of range (line " + std::to_string(line_no) +
                                     ")",
                                 line_no);
            auto& c = cells[trial];
            c[s][0][0] = to_u64(require(kv, "pp", line_no));
            c[s][0][1] = to_u64(require(kv, "pm", line_no));
            c[s][1][0] = to_u64(require(kv, "mp", line_no));
            c[s][1][1] = to_u64(require(kv, "mm", line_no));
            ++cells_seen[trial];
        } else {
            throw ParseError("unknown line type '" + tokens[0] + "' (line " +
                                 std::to_string(line_no) + ")",
                             line_no);
        }
    }

    for (TrialReport& r : reports) {
        if (auto it = timings.find(r.trial); it != timings.end()) r.wall_ms = it->second;
        if (auto it = cells_seen.find(r.trial); it != cells_seen.end() && it->second == 4)
            r.counts = make_pair_counts(cells[r.trial]);
    }
    return reports;
}

bool record_self_consistent(const TrialReport& r) {
    if (r.n_common == 0) return false;

    CorrelationSet corr;
    corr.value = r.correlation;
    corr.n = r.n_common;
    const ChshStatistics chsh = s_chsh(corr);

    const double delta = static_cast<double>(r.k_max) / static_cast<double>(r.n_common);
    const double bound = 4.0 - 2.0 * delta;
    const bool chsh2_case = r.k_max == r.n_common;

    return chsh.c_plus == r.c_plus && chsh.c_minus == r.c_minus && chsh.s_chsh == r.s_chsh &&
           chsh.negated_slot == r.negated_slot && delta == r.delta && bound == r.bound &&
           r.ok_c_plus == (r.c_plus <= bound + kInequalityEps) &&
           r.ok_c_minus == (r.c_minus <= bound + kInequalityEps) &&
           r.ok_s_chsh == (r.s_chsh <= bound + kInequalityEps) &&
           r.chsh2_applicable == chsh2_case &&
           r.ok_chsh2 == (!chsh2_case || r.s_chsh <= 2.0 + kInequalityEps);
}

// ---------------------------------------------------------------------------
// Human-readable output
// ---------------------------------------------------------------------------

std::string format_table(const std::vector<TrialReport>& reports) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%5s  %-22s %9s %9s %9s %9s %9s %8s %8s %8s %9s %8s  %-4s %-16s %9s\n",
                  "trial", "source", "N", "C1", "C2", "C3", "C4", "C+", "C-", "S_CHSH",
                  "delta", "4-2d", "ok", "method", "ms");
    out += buf;
    for (const TrialReport& r : reports) {
        const bool ok = r.ok_c_plus && r.ok_c_minus && r.ok_s_chsh && r.ok_chsh2;
        std::snprintf(buf, sizeof buf,
                      "%5d  %-22s %9llu %9.6f %9.6f %9.6f %9.6f %8.5f %8.5f %8.5f %9.6f %8.5f  %-4s %-16s %9.2f\n",
                      r.trial, r.source.c_str(), static_cast<unsigned long long>(r.n_common),
                      r.correlation[0], r.correlation[1], r.correlation[2], r.correlation[3],
                      r.c_plus, r.c_minus, r.s_chsh, r.delta, r.bound, ok ? "yes" : "NO",
                      r.method.c_str(), r.wall_ms);
        out += buf;
    }
    return out;
}

std::string format_counts(const PairCounts& counts) {
    std::string out = "setting      (+,+)      (+,-)      (-,+)      (-,-)      total\n";
    char buf[128];
    for (int s = 0; s < 4; ++s) {
        const auto& m = counts.counts[s];
        std::snprintf(buf, sizeof buf, "%-7s %10llu %10llu %10llu %10llu %10llu\n",
                      setting_name(kSettings[s]),
                      static_cast<unsigned long long>(m[0][0]),
                      static_cast<unsigned long long>(m[0][1]),
                      static_cast<unsigned long long>(m[1][0]),
                      static_cast<unsigned long long>(m[1][1]),
                      static_cast<unsigned long long>(m[0][0] + m[0][1] + m[1][0] + m[1][1]));
        out += buf;
    }
    return out;
}

}  // namespace eprb
