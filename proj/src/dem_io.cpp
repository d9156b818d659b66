#include "autdec/dem_io.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace autdec {

namespace {

std::string trim(const std::string& s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::size_t parse_index(const std::string& digits, std::size_t line, const std::string& token) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw DemParseError(line, "bad target '" + token + "'");
    }
    return static_cast<std::size_t>(std::stoull(digits));
}

struct Fault {
    double prob = 0.0;
    std::vector<std::size_t> detectors;
    std::vector<std::size_t> observables;
};

}  // namespace

DemParseError::DemParseError(std::size_t line_number, const std::string& what_happened)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what_happened),
      line(line_number) {}

DetectorErrorModel parse_dem(const std::string& text) {
    std::vector<Fault> faults;
    bool any_detector = false;
    bool any_observable = false;
    std::size_t max_detector = 0;
    std::size_t max_observable = 0;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const std::vector<std::string> tokens = split_tokens(line);
        const std::string& head = tokens.front();

        if (head.rfind("error(", 0) == 0) {
            if (head.back() != ')') {
                throw DemParseError(line_no, "malformed probability in '" + head + "'");
            }
            const std::string digits = head.substr(6, head.size() - 7);
            double prob = 0.0;
            std::size_t used = 0;
            try {
                prob = std::stod(digits, &used);
            } catch (const std::exception&) {
                throw DemParseError(line_no, "malformed probability '" + digits + "'");
            }
            if (used != digits.size()) {
                throw DemParseError(line_no, "malformed probability '" + digits + "'");
            }
            if (!(prob > 0.0) || !(prob < 1.0)) {
                throw DemParseError(line_no, "probability must lie in (0, 1)");
            }
            Fault fault;
            fault.prob = prob;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const std::string& tok = tokens[t];
                if (tok == "^") {
                    throw DemParseError(line_no, "'^' fault composition is not supported");
                }
                if (tok[0] == 'D') {
                    const std::size_t idx = parse_index(tok.substr(1), line_no, tok);
                    fault.detectors.push_back(idx);
                    any_detector = true;
                    if (idx > max_detector) max_detector = idx;
                } else if (tok[0] == 'L') {
                    const std::size_t idx = parse_index(tok.substr(1), line_no, tok);
                    fault.observables.push_back(idx);
                    any_observable = true;
                    if (idx > max_observable) max_observable = idx;
                } else {
                    throw DemParseError(line_no, "bad target '" + tok + "'");
                }
            }
            if (fault.detectors.empty() && fault.observables.empty()) {
                throw DemParseError(line_no, "error line has no targets");
            }
            faults.push_back(std::move(fault));
        } else if (head == "detector") {
            if (tokens.size() != 2 || tokens[1][0] != 'D') {
                throw DemParseError(line_no, "detector expects a single D<index> target");
            }
            const std::size_t idx = parse_index(tokens[1].substr(1), line_no, tokens[1]);
            any_detector = true;
            if (idx > max_detector) max_detector = idx;
        } else if (head == "logical_observable") {
            if (tokens.size() != 2 || tokens[1][0] != 'L') {
                throw DemParseError(line_no, "logical_observable expects a single L<index> target");
            }
            const std::size_t idx = parse_index(tokens[1].substr(1), line_no, tokens[1]);
            any_observable = true;
            if (idx > max_observable) max_observable = idx;
        } else if (head == "repeat") {
            throw DemParseError(line_no, "repeat blocks are not supported");
        } else {
            throw DemParseError(line_no, "unknown instruction '" + head + "'");
        }
    }

    const std::size_t num_detectors = any_detector ? max_detector + 1 : 0;
    const std::size_t num_observables = any_observable ? max_observable + 1 : 0;
    DetectorErrorModel dem;
    dem.h = BinaryMatrix(num_detectors, faults.size());
    dem.observables = BinaryMatrix(num_observables, faults.size());
    dem.priors.reserve(faults.size());
    for (std::size_t j = 0; j < faults.size(); ++j) {
        dem.priors.push_back(faults[j].prob);
        for (std::size_t d : faults[j].detectors) dem.h.set(d, j, true);
        for (std::size_t o : faults[j].observables) dem.observables.set(o, j, true);
    }
    return dem;
}

std::string write_dem(const DetectorErrorModel& dem) {
    std::string out;
    char buf[64];
    for (std::size_t j = 0; j < dem.priors.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "error(%.12g)", dem.priors[j]);
        out += buf;
        for (std::size_t i = 0; i < dem.h.rows(); ++i) {
            if (dem.h.get(i, j)) {
                out += " D" + std::to_string(i);
            }
        }
        for (std::size_t i = 0; i < dem.observables.rows(); ++i) {
            if (dem.observables.get(i, j)) {
                out += " L" + std::to_string(i);
            }
        }
        out += '\n';
    }
    if (dem.h.rows() > 0) {
        out += "detector D" + std::to_string(dem.h.rows() - 1) + "\n";
    }
    if (dem.observables.rows() > 0) {
        out += "logical_observable L" + std::to_string(dem.observables.rows() - 1) + "\n";
    }
    return out;
}

}  // namespace autdec
