#include "toricdiv/contraction.hpp"

#include <numeric>
#include <sstream>

namespace toricdiv {

namespace {

std::vector<long long> parse_list(const std::string& body, bool& special, const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "special") {
            special = true;
            continue;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw Error("");
        } catch (const std::exception&) {
            throw Error("bad number '" + item + "' in type '" + text + "'");
        }
    }
    return out;
}

}  // namespace

ContractionType ContractionType::a_type(long long a2, long long a3, long long d1, bool special) {
    if (a2 < 1 || a3 < 1 || d1 < 1) throw Error("A-type parameters must be positive");
    if (std::gcd(a2, a3) != 1) throw Error("A-type needs gcd(a2, a3) = 1");
    if (special && !(a2 == 1 && a3 == 1 && d1 == 2)) throw Error("the special A-type exists only for a2 = a3 = 1, d1 = 2");
    return {Family::A, {a2, a3, d1}, special};
}

ContractionType ContractionType::d_type(long long n, bool special) {
    if (n < 4) throw Error("D_n needs n >= 4 (D_{2k+1} needs k >= 2)");
    return {Family::D, {n}, special};
}

ContractionType ContractionType::e_type(int n) {
    switch (n) {
        case 6: return {Family::E6, {}, false};
        case 7: return {Family::E7, {}, false};
        case 8: return {Family::E8, {}, false};
    }
    throw Error("E_n exists for n = 6, 7, 8");
}

ContractionType ContractionType::odp_type(long long b2, long long b3, long long b4) {
    if (b2 < 1 || b3 < 1 || b4 < 1) throw Error("ODP parameters must be positive");
    if (b3 + b4 != b2 + 1) throw Error("ODP type needs b3 + b4 = b2 + 1");
    ContractionType t{Family::OdpA, {b2, b3, b4}, false};
    blowup_ray(t.germ(), t.weights());  // gcd conditions
    return t;
}

ContractionType ContractionType::parse(const std::string& text) {
    if (text == "E6") return e_type(6);
    if (text == "E7") return e_type(7);
    if (text == "E8") return e_type(8);
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("unknown type '" + text + "' (expected An:a2,a3,d1, D:n, E6, E7, E8 or odpA:b2,b3,b4)");
    std::string head = text.substr(0, colon);
    bool special = false;
    auto v = parse_list(text.substr(colon + 1), special, text);
    if (head == "An") {
        if (v.size() != 3) throw Error("type syntax is An:a2,a3,d1[,special]");
        return a_type(v[0], v[1], v[2], special);
    }
    if (head == "D") {
        if (v.size() != 1) throw Error("type syntax is D:n[,special]");
        return d_type(v[0], special);
    }
    if (head == "odpA") {
        if (v.size() != 3 || special) throw Error("type syntax is odpA:b2,b3,b4");
        return odp_type(v[0], v[1], v[2]);
    }
    throw Error("unknown type family '" + head + "'");
}

std::string ContractionType::spelling() const {
    auto join = [&] {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        return s + (special ? ",special" : "");
    };
    switch (family) {
        case Family::A: return "An:" + join();
        case Family::D: return "D:" + join();
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::OdpA: return "odpA:" + join();
    }
    return "?";
}

std::string ContractionType::name() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(du_val_index());
        case Family::D: return "D" + std::to_string(du_val_index());
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::OdpA:
            return "ODP_A(" + std::to_string(params[0]) + ";" + std::to_string(params[1]) + "," +
                   std::to_string(params[2]) + ")";
    }
    return "?";
}

GermSpec ContractionType::germ() const {
    return family == Family::OdpA ? GermSpec::odp() : GermSpec::smooth();
}

std::vector<long long> ContractionType::weights() const {
    switch (family) {
        case Family::A: return {1, params[0] * params[2], params[1] * params[2]};
        case Family::D: return {2, params[0] - 2, params[0] - 1};  // (2,2k,2k+1) or (2,2k-1,2k)
        case Family::E6: return {3, 4, 6};
        case Family::E7: return {4, 6, 9};
        case Family::E8: return {6, 10, 15};
        case Family::OdpA: return {1, params[0], params[1], params[2]};
    }
    return {};
}

LatticeVector ContractionType::ray() const { return blowup_ray(germ(), weights()); }

MonomialBranch ContractionType::phi() const {
    auto branch = [](std::vector<std::vector<long long>> ex, std::string label) {
        return MonomialBranch{std::move(ex), std::move(label)};
    };
    switch (family) {
        case Family::A: {
            if (special) return branch({{2, 1, 0}, {0, 0, 2}}, "x1^2*x2+x3^2");
            long long e = (params[0] + params[1]) * params[2];
            return branch({{0, 1, 1}, {e, 0, 0}}, "x2*x3+x1^" + std::to_string(e));
        }
        case Family::D: {
            if (special) return branch({{1, 2, 0}, {0, 0, 2}}, "x1*x2^2+x3^2");
            long long e = params[0] - 1;
            return branch({{0, 0, 2}, {1, 2, 0}, {e, 0, 0}}, "x3^2+x1*x2^2+x1^" + std::to_string(e));
        }
        case Family::E6: return branch({{0, 0, 2}, {0, 3, 0}, {4, 0, 0}}, "x3^2+x2^3+x1^4");
        case Family::E7: return branch({{0, 0, 2}, {0, 3, 0}, {3, 1, 0}}, "x3^2+x2^3+x2*x1^3");
        case Family::E8: return branch({{5, 0, 0}, {0, 3, 0}, {0, 0, 2}}, "x1^5+x2^3+x3^2");
        case Family::OdpA:
            return branch({{params[0], 0, 0, 0}, {0, 1, 0, 0}}, "x1^" + std::to_string(params[0]) + "+x2");
    }
    return {};
}

long long ContractionType::du_val_index() const {
    switch (family) {
        case Family::A: return (params[0] + params[1]) * params[2] - 1;
        case Family::D: return params[0];
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::OdpA: return 0;
    }
    return 0;
}

}  // namespace toricdiv
