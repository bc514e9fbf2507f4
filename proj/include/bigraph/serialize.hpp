#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigraph/census.hpp"
#include "bigraph/numeric.hpp"

namespace bigraph {

using json = nlohmann::ordered_json;

inline json rational_to_json(const Rational& q) {
    return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline Rational rational_from_json(const json& j) {
    BigInt num(j.at("num").get<std::string>());
    BigNat den(j.at("den").get<std::string>());
    return Rational(num, den);
}

inline json census_to_json(const Census& c) {
    json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["k"] = c.k;
    j["num_classes"] = c.classes.size();
    j["binomial"] = c.binomial.str();
    j["paper_lhs"] = rational_to_json(c.lhs);
    j["paper_rhs"] = rational_to_json(c.rhs);
    j["residual"] = rational_to_json(c.residual);
    j["exact_partition_ok"] = c.partition_ok;
    j["eq2_exact_ok"] = c.stabilizer_sum_ok;
    j["mismatch_classes"] = c.mismatch_classes;
    j["classes"] = json::array();
    for (const auto& cls : c.classes) {
        json e;
        e["canonical"] = cls.canonical;
        e["orbit_size"] = cls.orbit_size.str();
        e["stabilizer_order"] = cls.stabilizer_order.str();
        e["deltas_rows"] = cls.deltas_rows;
        e["deltas_cols"] = cls.deltas_cols;
        e["delta_fact_product"] = cls.delta_factorial_product.str();
        e["row_degrees"] = cls.row_degrees;
        e["col_degrees"] = cls.col_degrees;
        j["classes"].push_back(std::move(e));
    }
    return j;
}

inline Census census_from_json(const json& j) {
    Census c;
    c.m = j.at("m").get<int>();
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.binomial = BigNat(j.at("binomial").get<std::string>());
    c.lhs = rational_from_json(j.at("paper_lhs"));
    c.rhs = rational_from_json(j.at("paper_rhs"));
    c.residual = rational_from_json(j.at("residual"));
    c.partition_ok = j.at("exact_partition_ok").get<bool>();
    c.stabilizer_sum_ok = j.at("eq2_exact_ok").get<bool>();
    c.mismatch_classes = j.at("mismatch_classes").get<std::vector<std::string>>();
    for (const auto& e : j.at("classes")) {
        IsoClassRecord rec;
        rec.canonical = e.at("canonical").get<std::string>();
        rec.orbit_size = BigNat(e.at("orbit_size").get<std::string>());
        rec.stabilizer_order = BigNat(e.at("stabilizer_order").get<std::string>());
        rec.deltas_rows = e.at("deltas_rows").get<std::vector<int>>();
        rec.deltas_cols = e.at("deltas_cols").get<std::vector<int>>();
        rec.delta_factorial_product = BigNat(e.at("delta_fact_product").get<std::string>());
        rec.row_degrees = e.at("row_degrees").get<std::vector<int>>();
        rec.col_degrees = e.at("col_degrees").get<std::vector<int>>();
        c.classes.push_back(std::move(rec));
    }
    if (j.at("num_classes").get<std::size_t>() != c.classes.size())
        throw std::invalid_argument("census document: num_classes disagrees with class list");
    return c;
}

/// The one serialized form used for files and caching; parse + re-dump is
/// byte-identical.
inline std::string census_to_json_string(const Census& c) {
    return census_to_json(c).dump(2) + "\n";
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail

/// One row per class; list-valued fields are space-separated inside quotes.
inline std::string census_to_csv(const Census& c) {
    std::string out =
        "canonical,orbit_size,stabilizer_order,deltas_rows,deltas_cols,"
        "delta_fact_product,row_degrees,col_degrees\n";
    for (const auto& cls : c.classes) {
        out += cls.canonical;
        out += ',' + cls.orbit_size.str();
        out += ',' + cls.stabilizer_order.str();
        out += ",\"" + detail::join_ints(cls.deltas_rows) + '"';
        out += ",\"" + detail::join_ints(cls.deltas_cols) + '"';
        out += ',' + cls.delta_factorial_product.str();
        out += ",\"" + detail::join_ints(cls.row_degrees) + '"';
        out += ",\"" + detail::join_ints(cls.col_degrees) + "\"\n";
    }
    return out;
}

inline std::string census_to_text(const Census& c) {
    std::ostringstream os;
    os << "census m=" << c.m << " n=" << c.n << " k=" << c.k << "\n"
       << "  binomial:        " << c.binomial.str() << "\n"
       << "  num_classes:     " << c.classes.size() << "\n"
       << "  paper_lhs:       " << fraction_string(c.lhs) << "\n"
       << "  paper_rhs:       " << fraction_string(c.rhs) << "\n"
       << "  residual:        " << fraction_string(c.residual) << "\n"
       << "  partition exact: " << (c.partition_ok ? "ok" : "FAILED") << "\n"
       << "  stab-sum exact:  " << (c.stabilizer_sum_ok ? "ok" : "FAILED") << "\n";
    os << "  mismatch_classes (" << c.mismatch_classes.size() << "):";
    for (const auto& s : c.mismatch_classes) os << " " << s;
    os << "\n  classes:\n";
    for (const auto& cls : c.classes) {
        os << "    " << cls.canonical << "  orbit=" << cls.orbit_size.str()
           << " stab=" << cls.stabilizer_order.str()
           << " delta_fact=" << cls.delta_factorial_product.str()
           << " deltas_rows=[" << detail::join_ints(cls.deltas_rows) << "]"
           << " deltas_cols=[" << detail::join_ints(cls.deltas_cols) << "]"
           << " row_degrees=[" << detail::join_ints(cls.row_degrees) << "]"
           << " col_degrees=[" << detail::join_ints(cls.col_degrees) << "]\n";
    }
    return os.str();
}

inline json report_to_json(const VerifyReport& r) {
    json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["k"] = r.k;
    j["num_classes"] = r.num_classes;
    j["binomial"] = r.binomial.str();
    j["paper_lhs"] = rational_to_json(r.lhs);
    j["paper_rhs"] = rational_to_json(r.rhs);
    j["residual"] = rational_to_json(r.residual);
    j["exact_partition_ok"] = r.partition_ok;
    j["eq2_exact_ok"] = r.stabilizer_sum_ok;
    j["mismatch_classes"] = r.mismatch_classes;
    return j;
}

inline json reports_to_json(const std::vector<VerifyReport>& reports) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    return j;
}

inline std::string reports_to_text(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    os << "m  n  k   classes  binomial  lhs  rhs  residual  partition  stab-sum  mismatches\n";
    size_t partition_ok = 0, stab_ok = 0, residual_zero = 0;
    for (const auto& r : reports) {
        os << r.m << "  " << r.n << "  " << r.k << "   " << r.num_classes << "  "
           << r.binomial.str() << "  " << fraction_string(r.lhs) << "  "
           << fraction_string(r.rhs) << "  " << fraction_string(r.residual) << "  "
           << (r.partition_ok ? "ok" : "FAILED") << "  "
           << (r.stabilizer_sum_ok ? "ok" : "FAILED") << "  " << r.mismatch_classes.size()
           << "\n";
        partition_ok += r.partition_ok;
        stab_ok += r.stabilizer_sum_ok;
        residual_zero += r.residual == 0;
    }
    os << "checked " << reports.size() << " parameter sets: partition ok " << partition_ok
       << "/" << reports.size() << ", stab-sum ok " << stab_ok << "/" << reports.size()
       << ", residual zero " << residual_zero << "/" << reports.size() << "\n";
    return os.str();
}

}  // namespace bigraph
