#include "perclab/io.hpp"

#include <cmath>
#include <cstdio>

namespace perclab {

std::string format_float17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string arcs_plain(const std::vector<Vertex>& vertices) {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0) out += " / ";
        out += to_string(vertices[i]);
    }
    return out;
}

std::string arcs_csv(const std::vector<Vertex>& vertices) {
    std::string out = "a1,a2\n";
    for (Vertex v : vertices) out += to_string(v) + "\n";
    return out;
}

Json arcs_json(const std::vector<Vertex>& vertices) {
    Json arr = Json::array();
    for (Vertex v : vertices) arr.push_back({v.a1, v.a2});
    return arr;
}

std::string count_row_csv(const PathCountRow& row) {
    std::string out = "k,i,coefficient,power_of_two,count\n";
    BigInt pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(row.k));
    for (std::size_t i = 0; i < row.counts.size(); ++i) {
        BigInt coeff = row.counts[i] / pow2;
        out += std::to_string(row.k) + "," + std::to_string(i) + "," + coeff.get_str() + "," +
               pow2.get_str() + "," + row.counts[i].get_str() + "\n";
        mpz_fdiv_q_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), 1);
    }
    return out;
}

Json count_row_json(const PathCountRow& row) {
    Json rows = Json::array();
    BigInt pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(row.k));
    for (std::size_t i = 0; i < row.counts.size(); ++i) {
        rows.push_back({{"i", i},
                        {"coefficient", BigInt(row.counts[i] / pow2).get_str()},
                        {"power_of_two", pow2.get_str()},
                        {"count", row.counts[i].get_str()}});
        mpz_fdiv_q_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), 1);
    }
    return Json{{"k", row.k}, {"rows", rows}, {"total", row.total.get_str()}};
}

PathCountRow count_row_from_json(const Json& j) {
    PathCountRow row;
    row.k = j.at("k").get<std::int64_t>();
    for (const Json& r : j.at("rows"))
        row.counts.emplace_back(r.at("count").get<std::string>());
    row.total = BigInt(j.at("total").get<std::string>());
    return row;
}

std::string histogram_csv(const PathHistogram& hist) {
    std::string out = "k,norm,paths\n";
    for (const auto& [n, c] : hist.by_norm)
        out += std::to_string(hist.k) + "," + std::to_string(n) + "," + c.get_str() + "\n";
    return out;
}

Json histogram_json(const PathHistogram& hist) {
    Json by_norm = Json::object();
    for (const auto& [n, c] : hist.by_norm) by_norm[std::to_string(n)] = c.get_str();
    return Json{{"k", hist.k}, {"by_norm", by_norm}};
}

std::string bound_csv(const std::vector<BoundPoint>& points) {
    std::string out = "k,mid,log_count,b_k,abs_err_vs_limit\n";
    for (const BoundPoint& pt : points)
        out += std::to_string(pt.k) + "," + std::to_string(pt.mid) + "," +
               format_float17(pt.log_count) + "," + format_float17(pt.b_k) + "," +
               format_float17(std::abs(pt.b_k - kBoundLimit)) + "\n";
    return out;
}

Json bound_json(const std::vector<BoundPoint>& points) {
    Json arr = Json::array();
    for (const BoundPoint& pt : points)
        arr.push_back({{"k", pt.k},
                       {"mid", pt.mid},
                       {"log_count", pt.log_count},
                       {"b_k", pt.b_k},
                       {"abs_err_vs_limit", std::abs(pt.b_k - kBoundLimit)}});
    return arr;
}

std::vector<BoundPoint> bound_from_json(const Json& j) {
    std::vector<BoundPoint> points;
    for (const Json& e : j) {
        BoundPoint pt;
        pt.k = e.at("k").get<std::int64_t>();
        pt.mid = e.at("mid").get<std::int64_t>();
        pt.log_count = e.at("log_count").get<double>();
        pt.b_k = e.at("b_k").get<double>();
        points.push_back(pt);
    }
    return points;
}

std::string estimate_csv_header() {
    return "variant,k,p,event,trials,hits,phat,ci_low,ci_high,seed\n";
}

std::string estimate_csv_row(const CrossingEstimate& est) {
    const SimConfig& c = est.config;
    return variant_name(c.variant) + "," + std::to_string(c.k) + "," + format_float17(c.p) +
           "," + event_name(est.event) + "," + std::to_string(c.trials) + "," +
           std::to_string(est.hits) + "," + format_float17(est.phat) + "," +
           format_float17(est.ci_low) + "," + format_float17(est.ci_high) + "," +
           std::to_string(c.seed) + "\n";
}

std::string estimates_csv(const std::vector<CrossingEstimate>& table) {
    std::string out = estimate_csv_header();
    for (const CrossingEstimate& est : table) out += estimate_csv_row(est);
    return out;
}

Json estimate_json(const CrossingEstimate& est) {
    const SimConfig& c = est.config;
    return Json{{"variant", variant_name(c.variant)},
                {"k", c.k},
                {"p", c.p},
                {"event", event_name(est.event)},
                {"trials", c.trials},
                {"hits", est.hits},
                {"phat", est.phat},
                {"ci_low", est.ci_low},
                {"ci_high", est.ci_high},
                {"seed", c.seed},
                {"origin_rule", origin_rule_name(c.origin_rule)}};
}

CrossingEstimate estimate_from_json(const Json& j) {
    CrossingEstimate est;
    est.config.variant = variant_from_name(j.at("variant").get<std::string>());
    est.config.k = j.at("k").get<std::int64_t>();
    est.config.p = j.at("p").get<double>();
    est.config.trials = j.at("trials").get<std::int64_t>();
    est.config.seed = j.at("seed").get<std::uint64_t>();
    est.config.origin_rule = origin_rule_from_name(j.at("origin_rule").get<std::string>());
    est.event = event_from_name(j.at("event").get<std::string>());
    est.hits = j.at("hits").get<std::int64_t>();
    est.phat = j.at("phat").get<double>();
    est.ci_low = j.at("ci_low").get<double>();
    est.ci_high = j.at("ci_high").get<double>();
    return est;
}

Json estimates_json(const std::vector<CrossingEstimate>& table) {
    Json arr = Json::array();
    for (const CrossingEstimate& est : table) arr.push_back(estimate_json(est));
    return arr;
}

}  // namespace perclab
