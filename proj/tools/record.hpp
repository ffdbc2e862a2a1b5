#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bell::cli {

// One structured result row, emitted as a JSON line or a CSV row. Both
// encodings round-trip: emit -> parse -> emit is a fixed point.
struct Record {
    std::string model;
    std::optional<std::string> state;
    std::optional<double> lambda_mix;
    std::optional<double> sigma_s;
    std::optional<double> sigma_m;
    std::optional<double> sigma_a;
    std::optional<double> sigma_b;
    std::optional<double> eps;
    std::uint64_t seed{};
    std::optional<std::uint64_t> events;
    std::array<double, 8> settings_deg{};
    std::array<double, 4> terms{};
    double s{};
    double std_error{};
    std::optional<std::array<std::array<std::uint64_t, 4>, 4>> counts;

    bool operator==(const Record&) const = default;
};

std::string to_json_line(const Record& r);
Record record_from_json_line(const std::string& line);

const std::string& csv_header();
std::string to_csv_row(const Record& r);
Record record_from_csv_row(const std::string& row);

// Full document in the chosen format ("json" = JSON lines, "csv" = header
// plus one row per record).
std::string render_records(const std::vector<Record>& records, const std::string& format);

}  // namespace bell::cli
