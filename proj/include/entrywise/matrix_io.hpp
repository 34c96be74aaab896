#ifndef ENTRYWISE_MATRIX_IO_HPP
#define ENTRYWISE_MATRIX_IO_HPP

#include "entrywise/hermitian.hpp"
#include "entrywise/partition.hpp"
#include "entrywise/preserver_spec.hpp"
#include "entrywise/rational.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrywise {

using Json = nlohmann::ordered_json;

/// Matrix schema: {"n": N, "field": "real"|"complex", "rows": [[entry,...],...]}
/// with a complex entry encoded as [re, im].
inline HermitianMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw std::invalid_argument("matrix JSON must carry 'n' and 'rows'");
    }
    const Eigen::Index n = j.at("n").get<Eigen::Index>();
    const std::string fieldName = j.value("field", std::string("real"));
    Field field;
    if (fieldName == "real") {
        field = Field::Real;
    } else if (fieldName == "complex") {
        field = Field::Complex;
    } else {
        throw std::invalid_argument("matrix JSON field must be 'real' or 'complex'");
    }
    const Json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
        throw std::invalid_argument("matrix JSON needs exactly n rows");
    }
    MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw std::invalid_argument("matrix JSON needs exactly n entries per row");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const Json& e = row.at(static_cast<std::size_t>(k));
            if (e.is_number()) {
                m(i, k) = Complex(e.get<double>(), 0.0);
            } else if (e.is_array() && e.size() == 2) {
                m(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
            } else {
                throw std::invalid_argument("matrix JSON entries must be numbers or [re, im] pairs");
            }
        }
    }
    return HermitianMatrix(std::move(m), field);
}

inline Json matrix_to_json(const HermitianMatrix& a) {
    Json j;
    j["n"] = a.dim();
    j["field"] = a.is_real() ? "real" : "complex";
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < a.dim(); ++k) {
            const Complex z = a(i, k);
            if (a.is_real()) {
                row.push_back(z.real());
            } else {
                row.push_back(Json::array({z.real(), z.imag()}));
            }
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

/// CSV: N lines of N comma-separated decimals, real matrices only.
inline HermitianMatrix matrix_from_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    if (n == 0) throw std::invalid_argument("matrix CSV is empty");
    MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw std::invalid_argument("matrix CSV must be square");
        }
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = Complex(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], 0.0);
    }
    return HermitianMatrix(std::move(m), Field::Real);
}

inline std::string matrix_to_csv(const HermitianMatrix& a) {
    if (!a.is_real()) throw std::domain_error("matrix CSV supports real matrices only");
    std::ostringstream os;
    os.precision(17);
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        for (Eigen::Index k = 0; k < a.dim(); ++k) {
            if (k > 0) os << ',';
            os << a(i, k).real();
        }
        os << '\n';
    }
    return os.str();
}

inline HermitianMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        return matrix_from_csv(in);
    }
    Json j = Json::parse(in);
    return matrix_from_json(j);
}

inline Json vector_to_json(const VectorXcd& u, bool realField) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (realField) {
            arr.push_back(u(i).real());
        } else {
            arr.push_back(Json::array({u(i).real(), u(i).imag()}));
        }
    }
    return arr;
}

/// Partition schema with 1-based indices: {"blocks": [[1,2],[3]], "size": 2}.
inline Json partition_to_json(const Partition& pi) {
    Json blocks = Json::array();
    for (const auto& b : pi.blocks()) {
        Json blk = Json::array();
        for (std::size_t e : b) blk.push_back(e + 1);
        blocks.push_back(std::move(blk));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    j["size"] = pi.size();
    return j;
}

inline Partition partition_from_json(const Json& j, std::size_t groundSize) {
    const Json& blocks = j.is_object() ? j.at("blocks") : j;
    std::vector<std::vector<std::size_t>> parsed;
    for (const Json& blk : blocks) {
        std::vector<std::size_t> b;
        for (const Json& e : blk) {
            const long long v = e.get<long long>();
            if (v < 1) throw std::invalid_argument("partition JSON uses 1-based indices");
            b.push_back(static_cast<std::size_t>(v - 1));
        }
        parsed.push_back(std::move(b));
    }
    return Partition::from_blocks(std::move(parsed), groundSize);
}

/// Rational from a JSON number (via its shortest decimal form) or from a
/// string such as "1/3" or "0.25".
inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return rational_from_double(j.get<double>());
    throw std::invalid_argument("expected a number or a rational string");
}

/// Preserver spec schema:
/// {"c": [...], "n": [...], "M": m, "cprime": x, "rho": r, "testset": "..."}.
inline PreserverSpec spec_from_json(const Json& j) {
    PreserverSpec spec;
    if (!j.contains("c") || !j.contains("n") || !j.contains("M")) {
        throw std::invalid_argument("spec JSON must carry 'c', 'n' and 'M'");
    }
    for (const Json& c : j.at("c")) spec.coeffs.push_back(rational_from_json(c));
    std::vector<double> exps;
    for (const Json& e : j.at("n")) exps.push_back(e.get<double>());
    spec.exponents = ExponentTuple(exps);
    spec.M = j.at("M").get<double>();
    if (j.contains("cprime")) spec.cPrime = rational_from_json(j.at("cprime"));
    if (j.contains("rho")) spec.rho = rational_from_json(j.at("rho"));
    if (j.contains("testset")) {
        spec.testSet = test_set_from_string(j.at("testset").get<std::string>());
    } else {
        // infer the widest test set admissible for the exponent data
        const std::size_t N = spec.coeffs.size();
        const double threshold = static_cast<double>(N) - 1.0;
        auto fullOk = [&](double e) { return (e >= 0.0 && std::rint(e) == e) || e >= threshold; };
        bool consecutive = spec.exponents.consecutive() && std::rint(spec.M) == spec.M && spec.M >= 0.0;
        bool full = fullOk(spec.M);
        for (double e : spec.exponents.values()) full = full && fullOk(e);
        if (consecutive) {
            spec.testSet = TestSet::ComplexDiscConsecutive;
        } else if (full) {
            spec.testSet = TestSet::FullClosedRealPowers;
        } else {
            spec.testSet = TestSet::RankOneOpen;
        }
    }
    spec.validate();
    return spec;
}

inline Json spec_to_json(const PreserverSpec& spec) {
    Json j;
    Json c = Json::array();
    for (const Rational& x : spec.coeffs) c.push_back(to_fraction_string(x));
    j["c"] = std::move(c);
    j["n"] = spec.exponents.values();
    j["M"] = spec.M;
    j["cprime"] = to_fraction_string(spec.cPrime);
    j["rho"] = to_fraction_string(spec.rho);
    j["testset"] = to_string(spec.testSet);
    return j;
}

} // namespace entrywise

#endif // ENTRYWISE_MATRIX_IO_HPP
