#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "autdec/gf2.hpp"

namespace autdec {

/// Detector error model: one column per fault, detector rows in h and
/// observable rows in observables, with a firing probability per fault.
struct DetectorErrorModel {
    BinaryMatrix h;            // num_detectors x num_faults
    std::vector<double> priors;
    BinaryMatrix observables;  // num_observables x num_faults
};

struct DemParseError : std::runtime_error {
    DemParseError(std::size_t line_number, const std::string& what_happened);
    std::size_t line = 0;
};

/// Text format, line oriented:
///   error(<p>) D<i>... L<j>...   one fault hitting those detectors/observables
///   detector D<i>                declares a detector (raises the row count)
///   logical_observable L<j>      declares an observable
/// Blank lines and '#' comments are ignored. Detector and observable counts
/// come from the highest index seen; fault columns follow file order.
/// Unsupported syntax ('^' separators, repeat blocks, unknown instructions)
/// and malformed or out-of-range probabilities raise DemParseError with the
/// offending line number.
DetectorErrorModel parse_dem(const std::string& text);

/// Canonical form: every fault on its own error(...) line in column order with
/// probabilities at 12 significant digits, then declarations pinning the
/// detector and observable counts. parse_dem(write_dem(d)) reproduces d.
std::string write_dem(const DetectorErrorModel& dem);

}  // namespace autdec
