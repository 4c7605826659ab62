#include <json.hpp>
#include <map>
#include <set>

#include "symhyp/params.hpp"

namespace symhyp {

using nlohmann::ordered_json;

std::string family_name(Family f) {
    switch (f) {
        case Family::AskeyWilson: return "askey-wilson";
        case Family::Whittaker: return "whittaker";
        case Family::Wilson: return "wilson";
        case Family::ContinuousHahn: return "continuous-hahn";
        case Family::Jacobi: return "jacobi";
        case Family::Laguerre: return "laguerre";
        case Family::Hermite: return "hermite";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    static const std::map<std::string, Family> names = {
        {"askey-wilson", Family::AskeyWilson}, {"aw", Family::AskeyWilson},
        {"macdonald-koornwinder", Family::AskeyWilson},
        {"whittaker", Family::Whittaker},
        {"wilson", Family::Wilson},
        {"continuous-hahn", Family::ContinuousHahn}, {"chahn", Family::ContinuousHahn},
        {"jacobi", Family::Jacobi},
        {"laguerre", Family::Laguerre},
        {"hermite", Family::Hermite},
    };
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

namespace {

class KV {
  public:
    explicit KV(const std::vector<std::pair<std::string, GaussRational>>& kv) {
        for (const auto& [k, v] : kv) {
            if (!m_.emplace(k, v).second) throw BadInput("duplicate parameter '" + k + "'");
        }
    }
    GaussRational get(const std::string& key) {
        auto it = m_.find(key);
        if (it == m_.end()) throw BadInput("missing parameter '" + key + "'");
        used_.insert(it->first);
        return it->second;
    }
    Rat get_real(const std::string& key) {
        GaussRational v = get(key);
        if (!v.is_real()) throw BadInput("parameter '" + key + "' must be real");
        return v.re();
    }
    void check_all_used() const {
        for (const auto& [k, v] : m_)
            if (!used_.count(k)) throw BadInput("unknown parameter '" + k + "'");
    }

  private:
    std::map<std::string, GaussRational> m_;
    std::set<std::string> used_;
};

}  // namespace

ParamPoint<GaussRational> make_params(
    Family family, const std::vector<std::pair<std::string, GaussRational>>& kv) {
    using K = GaussRational;
    KV in(kv);
    ParamPoint<K> out;
    switch (family) {
        case Family::AskeyWilson: {
            AWParams<K> p;
            p.q = in.get_real("q");
            p.t = in.get_real("t");
            for (int l = 0; l < 4; ++l) p.tl[static_cast<size_t>(l)] = in.get_real("t" + std::to_string(l));
            p.t0hat = in.get_real("t0hat");
            if (p.q.is_zero()) throw BadInput("the q modulus must be nonzero");
            K prod = p.tl[0] * p.tl[1] * p.tl[2] * p.tl[3];
            if (!(p.t0hat * p.t0hat * p.q == prod))
                throw BadInput("t0hat^2 must equal t0 t1 t2 t3 / q exactly");
            out = p;
            break;
        }
        case Family::Whittaker: {
            WhittakerParams<K> p;
            p.t = in.get_real("t");
            for (int l = 0; l < 4; ++l) p.tl[static_cast<size_t>(l)] = in.get_real("t" + std::to_string(l));
            out = p;
            break;
        }
        case Family::Wilson: {
            WilsonParams<K> p;
            p.g = in.get_real("g");
            for (int l = 0; l < 4; ++l) p.gl[static_cast<size_t>(l)] = in.get_real("g" + std::to_string(l));
            out = p;
            break;
        }
        case Family::ContinuousHahn: {
            CHahnParams<K> p{in.get("g"), in.get("g0"), in.get("g1")};
            if (!p.g.is_real() || !(p.g.re() > Rat(0)))
                throw BadInput("the coupling g must be a positive rational");
            if (!(p.g0.re() > Rat(0)) || !(p.g1.re() > Rat(0)))
                throw BadInput("g0 and g1 must have positive real part");
            out = p;
            break;
        }
        case Family::Jacobi: {
            out = JacobiParams<K>{in.get_real("g"), in.get_real("g0"), in.get_real("g1")};
            break;
        }
        case Family::Laguerre: {
            out = LaguerreParams<K>{in.get_real("g"), in.get_real("h"), in.get_real("omega")};
            break;
        }
        case Family::Hermite: {
            out = HermiteParams<K>{in.get_real("g"), in.get_real("omega")};
            break;
        }
    }
    in.check_all_used();
    return out;
}

namespace {

GaussRational gauss_from_json(const ordered_json& j) {
    if (j.is_string()) return GaussRational(Rat::parse(j.get<std::string>()));
    if (j.is_number_integer()) return GaussRational(Rat(j.get<long>()));
    if (j.is_object()) {
        Rat re = j.contains("re") ? Rat::parse(j.at("re").get<std::string>()) : Rat(0);
        Rat im = j.contains("im") ? Rat::parse(j.at("im").get<std::string>()) : Rat(0);
        return GaussRational(re, im);
    }
    throw BadInput("expected a rational string or {re, im} object");
}

ordered_json gauss_to_json(const GaussRational& v) {
    return ordered_json{{"re", v.re().str()}, {"im", v.im().str()}};
}

}  // namespace

ParamPoint<GaussRational> params_from_json_text(Family family, const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw BadInput("parameter file must be a JSON object");
    std::vector<std::pair<std::string, GaussRational>> kv;
    for (const auto& [key, val] : j.items()) kv.emplace_back(key, gauss_from_json(val));
    return make_params(family, kv);
}

std::string params_to_json_text(const ParamPoint<GaussRational>& p) {
    ordered_json j;
    j["family"] = family_name(family_of(p));
    auto put = [&](const std::string& k, const GaussRational& v) {
        if (v.is_real())
            j[k] = v.re().str();
        else
            j[k] = gauss_to_json(v);
    };
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, AWParams<GaussRational>>) {
                put("q", b.q);
                put("t", b.t);
                for (int l = 0; l < 4; ++l) put("t" + std::to_string(l), b.tl[static_cast<size_t>(l)]);
                put("t0hat", b.t0hat);
            } else if constexpr (std::is_same_v<T, WhittakerParams<GaussRational>>) {
                put("t", b.t);
                for (int l = 0; l < 4; ++l) put("t" + std::to_string(l), b.tl[static_cast<size_t>(l)]);
            } else if constexpr (std::is_same_v<T, WilsonParams<GaussRational>>) {
                put("g", b.g);
                for (int l = 0; l < 4; ++l) put("g" + std::to_string(l), b.gl[static_cast<size_t>(l)]);
            } else if constexpr (std::is_same_v<T, CHahnParams<GaussRational>>) {
                put("g", b.g);
                put("g0", b.g0);
                put("g1", b.g1);
            } else if constexpr (std::is_same_v<T, JacobiParams<GaussRational>>) {
                put("g", b.g);
                put("g0", b.g0);
                put("g1", b.g1);
            } else if constexpr (std::is_same_v<T, LaguerreParams<GaussRational>>) {
                put("g", b.g);
                put("h", b.h);
                put("omega", b.omega);
            } else {
                put("g", b.g);
                put("omega", b.omega);
            }
        },
        p);
    return j.dump();
}

}  // namespace symhyp
