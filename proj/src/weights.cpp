#include "hardycert/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardycert/accum.hpp"

namespace hardy {

WeightSpec WeightSpec::constant() { return {}; }

WeightSpec WeightSpec::power(double alpha) {
    if (!(alpha > -1.0))
        throw std::invalid_argument("power weights need alpha > -1, got alpha = " +
                                    std::to_string(alpha));
    WeightSpec s;
    s.kind = WeightKind::power;
    s.alpha = alpha;
    return s;
}

WeightSpec WeightSpec::geometric(double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("geometric weights need ratio > 0, got r = " +
                                    std::to_string(r));
    WeightSpec s;
    s.kind = WeightKind::geometric;
    s.ratio = r;
    return s;
}

WeightSpec WeightSpec::explicit_list(std::vector<double> entries) {
    if (entries.empty()) throw std::invalid_argument("weight list is empty");
    if (!(entries.front() > 0.0))
        throw std::invalid_argument("first weight must be positive");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i] >= 0.0) || !std::isfinite(entries[i]))
            throw std::invalid_argument("weight entry " + std::to_string(i + 1) +
                                        " must be finite and nonnegative");
    }
    WeightSpec s;
    s.kind = WeightKind::explicit_list;
    s.entries = std::move(entries);
    return s;
}

WeightSpec WeightSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need_arg = [&](const char* what) {
        if (arg.empty())
            throw std::invalid_argument(std::string("weights '") + head + "' needs " + what +
                                        ", e.g. " + head + ":" + what);
    };
    auto to_double = [&](const std::string& s) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + s + "' in weight spec '" + text + "'");
        }
        if (pos != s.size())
            throw std::invalid_argument("bad number '" + s + "' in weight spec '" + text + "'");
        return v;
    };
    if (head == "constant" || head == "cesaro") {
        if (!arg.empty()) throw std::invalid_argument("constant weights take no parameter");
        return constant();
    }
    if (head == "power") {
        need_arg("ALPHA");
        return power(to_double(arg));
    }
    if (head == "geometric") {
        need_arg("RATIO");
        return geometric(to_double(arg));
    }
    if (head == "list") {
        need_arg("V1,V2,...");
        std::vector<double> vs;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) vs.push_back(to_double(item));
        return explicit_list(std::move(vs));
    }
    throw std::invalid_argument("unknown weight kind '" + head +
                                "' (expected constant, power:A, geometric:R, list:..., file:PATH)");
}

std::string WeightSpec::to_string() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
        case WeightKind::constant: return "constant";
        case WeightKind::power: os << "power:" << alpha; return os.str();
        case WeightKind::geometric: os << "geometric:" << ratio; return os.str();
        case WeightKind::explicit_list: {
            os << "list:";
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (i) os << ',';
                os << entries[i];
            }
            return os.str();
        }
    }
    return "constant";
}

WeightSequence::WeightSequence(WeightSpec spec, std::size_t n) : spec_(std::move(spec)) {
    if (n == 0) throw std::invalid_argument("weight sequence length must be >= 1");
    lambda_.resize(n);
    switch (spec_.kind) {
        case WeightKind::constant:
            for (std::size_t i = 0; i < n; ++i) lambda_[i] = 1.0;
            break;
        case WeightKind::power:
            if (!(spec_.alpha > -1.0)) throw std::invalid_argument("power weights need alpha > -1");
            for (std::size_t i = 0; i < n; ++i)
                lambda_[i] = std::pow(static_cast<double>(i + 1), spec_.alpha);
            break;
        case WeightKind::geometric:
            if (!(spec_.ratio > 0.0)) throw std::invalid_argument("geometric weights need r > 0");
            for (std::size_t i = 0; i < n; ++i)
                lambda_[i] = std::pow(spec_.ratio, static_cast<double>(i + 1));
            break;
        case WeightKind::explicit_list:
            if (spec_.entries.size() < n)
                throw std::invalid_argument("weight list has " +
                                            std::to_string(spec_.entries.size()) +
                                            " entries, need " + std::to_string(n));
            for (std::size_t i = 0; i < n; ++i) lambda_[i] = spec_.entries[i];
            break;
    }
    if (!(lambda_[0] > 0.0)) throw std::invalid_argument("lambda_1 must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(lambda_[i] >= 0.0) || !std::isfinite(lambda_[i]))
            throw std::invalid_argument("lambda_" + std::to_string(i + 1) +
                                        " must be finite and nonnegative");
        if (lambda_[i] == 0.0) all_positive_ = false;
    }
    prefix_ = prefix_sums(lambda_);
}

double WeightSequence::ratio(std::size_t n) const {
    double l = lambda(n);
    if (l == 0.0)
        throw std::domain_error("Lambda_n/lambda_n undefined: lambda_" + std::to_string(n) +
                                " = 0");
    return Lambda(n) / l;
}

WeightSequence make_weights(const WeightSpec& spec, std::size_t n) {
    return WeightSequence(spec, n);
}

PowerSumBounds power_sum_bounds(std::size_t n, double r) {
    if (n < 1) throw std::invalid_argument("power_sum_bounds needs n >= 1");
    if (!(r > -1.0) || !(r <= 1.0))
        throw std::invalid_argument("power_sum_bounds needs -1 < r <= 1, got r = " +
                                    std::to_string(r));
    double nd = static_cast<double>(n);
    if (r == 0.0) return {nd, nd, false};
    double np = std::pow(nd, r);
    double np1 = std::pow(nd + 1.0, r);
    double lower = nd * np1 / (r + 1.0);
    double upper = (r / (r + 1.0)) * np * np1 / (np1 - np);
    return {lower, upper, r < 0.0};
}

}  // namespace hardy
