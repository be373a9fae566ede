#include "kuranet/result_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "kuranet/errors.hpp"

namespace kuranet {

namespace {

constexpr std::array<const char*, 8> kResultColumns = {
    "N", "p", "K", "rep", "R_mean", "R_std", "edges", "wall_s"};

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const char* col, long line_no) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) {
        throw CsvFormatError("line " + std::to_string(line_no) +
                             ": column '" + col + "' is not a finite number: '" +
                             s + "'");
    }
    return v;
}

long parse_long(const std::string& s, const char* col, long line_no) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') {
        throw CsvFormatError("line " + std::to_string(line_no) + ": column '" +
                             col + "' is not an integer: '" + s + "'");
    }
    return v;
}

// getline that tolerates CRLF input.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) {
        return false;
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return true;
}

}  // namespace

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_result_csv(const ResultTable& table, std::ostream& out) {
    std::vector<ResultRow> rows = table.rows;
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ResultRow& a, const ResultRow& b) {
                         return std::tie(a.n, a.p, a.k, a.rep) <
                                std::tie(b.n, b.p, b.k, b.rep);
                     });
    out << "N,p,K,rep,R_mean,R_std,edges,wall_s\n";
    for (const ResultRow& r : rows) {
        out << r.n << ',' << format_g9(r.p) << ',' << format_g9(r.k) << ','
            << r.rep << ',' << format_g9(r.r_mean) << ',' << format_g9(r.r_std)
            << ',' << r.edges << ',' << format_g9(r.wall_s) << '\n';
    }
}

ResultTable read_result_csv(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
        throw CsvFormatError("empty input: expected a header line");
    }
    const std::vector<std::string> header = split_csv_line(line);
    std::array<int, kResultColumns.size()> col_idx;
    col_idx.fill(-1);
    for (std::size_t h = 0; h < header.size(); ++h) {
        bool known = false;
        for (std::size_t c = 0; c < kResultColumns.size(); ++c) {
            if (header[h] == kResultColumns[c]) {
                if (col_idx[c] != -1) {
                    throw CsvFormatError("duplicate column '" + header[h] + "'");
                }
                col_idx[c] = static_cast<int>(h);
                known = true;
                break;
            }
        }
        if (!known) {
            throw CsvFormatError("unknown column '" + header[h] + "'");
        }
    }
    for (std::size_t c = 0; c < kResultColumns.size(); ++c) {
        if (col_idx[c] == -1) {
            throw CsvFormatError(std::string("missing column '") +
                                 kResultColumns[c] + "'");
        }
    }

    ResultTable table;
    long line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;  // tolerate a trailing blank line
        }
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != header.size()) {
            throw CsvFormatError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(header.size()) + " fields, got " +
                                 std::to_string(f.size()));
        }
        ResultRow r;
        r.n = static_cast<int>(parse_long(f[col_idx[0]], "N", line_no));
        r.p = parse_double(f[col_idx[1]], "p", line_no);
        r.k = parse_double(f[col_idx[2]], "K", line_no);
        r.rep = static_cast<int>(parse_long(f[col_idx[3]], "rep", line_no));
        r.r_mean = parse_double(f[col_idx[4]], "R_mean", line_no);
        r.r_std = parse_double(f[col_idx[5]], "R_std", line_no);
        r.edges = parse_long(f[col_idx[6]], "edges", line_no);
        r.wall_s = parse_double(f[col_idx[7]], "wall_s", line_no);
        table.rows.push_back(r);
    }
    return table;
}

void write_trace_csv(const RunSummary& summary, double dt, std::ostream& out) {
    out << "step,t,R,psi\n";
    for (std::size_t i = 0; i < summary.r_series.size(); ++i) {
        out << i << ',' << format_g9(static_cast<double>(i) * dt) << ','
            << format_g9(summary.r_series[i]) << ','
            << format_g9(summary.psi_series[i]) << '\n';
    }
}

void write_variation_csv(const KcEstimate& est, std::ostream& out) {
    out << "K,variation,grand_mean_R,in_window\n";
    for (std::size_t i = 0; i < est.k_values.size(); ++i) {
        const bool in_window =
            est.grand_mean_by_k[i] >= 0.15 && est.grand_mean_by_k[i] <= 0.85;
        out << format_g9(est.k_values[i]) << ',' << format_g9(est.variation_by_k[i])
            << ',' << format_g9(est.grand_mean_by_k[i]) << ',' << (in_window ? 1 : 0)
            << '\n';
    }
}

}  // namespace kuranet
