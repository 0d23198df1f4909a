#ifndef CORIOLIS_CSV_HPP
#define CORIOLIS_CSV_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coriolis/stats.hpp"
#include "coriolis/synth.hpp"

namespace coriolis {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kShotCsvHeader =
    "parameter_value,shot_index,pop_a,pop_b,pop_c,pop_d,x,y";
inline constexpr const char* kBinnedCsvHeader =
    "parameter_value,mean_contrast,standard_error,bin_count";

/// Shot table, one row per shot, full double precision so re-analysis of
/// the file reproduces the in-memory results exactly.
std::string shot_table_to_csv(std::span<const ScanPoint> points);
void write_shot_csv(const std::string& path, std::span<const ScanPoint> points);

/// Parses a shot table; rows are grouped by consecutive parameter_value.
/// Schema violations throw CsvError with the 1-based line number.
std::vector<ScanPoint> parse_shot_csv(const std::string& text);
std::vector<ScanPoint> read_shot_csv(const std::string& path);

std::string binned_to_csv(std::span<const BinnedContrast> binned);
void write_binned_csv(const std::string& path,
                      std::span<const BinnedContrast> binned);

}  // namespace coriolis

#endif  // CORIOLIS_CSV_HPP
