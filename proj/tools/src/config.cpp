#include "config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "striptr/error.hpp"

namespace striptr::cli {

using nlohmann::json;

long default_precision()
{
    const char *env = std::getenv("STRIPTR_PRECISION");
    if (!env || !*env) {
        return 256;
    }
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 64) {
        throw ParseError("STRIPTR_PRECISION must be an integer >= 64, got '" + std::string(env) + "'");
    }
    return v;
}

namespace {

std::string as_string(const json &v, const std::string &where)
{
    if (!v.is_string()) {
        throw ParseError(where + ": expected a string (rationals are written as \"p/q\")");
    }
    return v.get<std::string>();
}

template <class T>
T as_integer(const json &j, const char *key, T fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    const json &v = j.at(key);
    if (!v.is_number_integer()) {
        throw ParseError(std::string(key) + ": expected an integer");
    }
    return v.get<T>();
}

// A parameter entry: either a rational or a monomial label.
struct Entry {
    std::optional<Rational> value;
    std::optional<Monomial> label;
};

Entry parse_entry(const std::string &text, const std::string &where)
{
    try {
        return {Rational::parse(text), std::nullopt};
    } catch (const ParseError &) {
    }
    try {
        return {std::nullopt, Monomial::parse(text)};
    } catch (const ParseError &) {
        throw ParseError(where + ": '" + text + "' is neither a rational nor a monomial");
    }
}

std::vector<Entry> parse_entries(const json &j, const char *key)
{
    std::vector<Entry> out;
    if (!j.contains(key)) {
        return out;
    }
    if (!j.at(key).is_array()) {
        throw ParseError(std::string(key) + ": expected a list");
    }
    int k = 1;
    for (const json &v : j.at(key)) {
        std::string where = std::string(key) + "[" + std::to_string(k++) + "]";
        out.push_back(parse_entry(as_string(v, where), where));
    }
    return out;
}

std::vector<Monomial> parse_labels(const json &j, const char *key, std::size_t expected)
{
    std::vector<Monomial> out;
    if (!j.contains(key)) {
        return out;
    }
    for (const json &v : j.at(key)) {
        out.push_back(Monomial::parse(as_string(v, std::string(key))));
    }
    if (out.size() != expected) {
        throw ParseError(std::string(key) + ": expected " + std::to_string(expected) + " labels");
    }
    return out;
}

} // namespace

RunConfig parse_config(const json &j)
{
    if (!j.is_object()) {
        throw ParseError("config: expected a JSON object");
    }
    std::vector<Entry> alphas = parse_entries(j, "alphas");
    std::vector<Entry> betas = parse_entries(j, "betas");
    long framing = as_integer<long>(j, "framing", 0);

    std::optional<KahlerMap> kahler;
    std::map<std::string, Rational> values;
    const bool has_kahler = j.contains("kahler_values") || j.contains("kahler_variables") ||
                            j.contains("alpha_labels") || j.contains("beta_labels");
    if (has_kahler) {
        if (j.contains("kahler_values")) {
            if (!j.at("kahler_values").is_object()) {
                throw ParseError("kahler_values: expected an object mapping names to rationals");
            }
            for (const auto &[name, v] : j.at("kahler_values").items()) {
                values.emplace(name, Rational::parse(as_string(v, "kahler_values." + name)));
            }
        }
        KahlerMap map;
        map.alpha_labels = parse_labels(j, "alpha_labels", alphas.size());
        map.beta_labels = parse_labels(j, "beta_labels", betas.size());
        if (j.contains("kahler_variables")) {
            for (const json &v : j.at("kahler_variables")) {
                map.variables.push_back(as_string(v, "kahler_variables"));
            }
        }
        kahler = std::move(map);
    }

    // Resolve each parameter to a value and, where possible, a label.
    auto resolve = [&](const std::vector<Entry> &entries, std::vector<Monomial> *labels, const char *what) {
        auto n_monomial = std::count_if(entries.begin(), entries.end(), [](const Entry &e) { return e.label; });
        if (n_monomial == 0) {
            std::vector<Rational> out;
            for (const Entry &e : entries) {
                out.push_back(*e.value);
            }
            return out;
        }
        if (static_cast<std::size_t>(n_monomial) != entries.size()) {
            throw ParseError(std::string(what) + ": mix of rational and monomial parameters");
        }
        if (!has_kahler || values.empty()) {
            throw ParseError(std::string(what) + ": monomial parameters need kahler_values");
        }
        if (!labels->empty()) {
            throw ParseError(std::string(what) + ": give either monomial parameters or explicit labels");
        }
        std::vector<Rational> out;
        for (const Entry &e : entries) {
            out.push_back(e.label->evaluate(values));
            labels->push_back(*e.label);
        }
        return out;
    };
    std::vector<Rational> alpha_values = resolve(alphas, kahler ? &kahler->alpha_labels : nullptr, "alphas");
    std::vector<Rational> beta_values = resolve(betas, kahler ? &kahler->beta_labels : nullptr, "betas");

    if (kahler) {
        if (kahler->alpha_labels.size() != alphas.size() || kahler->beta_labels.size() != betas.size()) {
            throw ParseError("every parameter needs a label (monomial parameters or *_labels lists)");
        }
        if (!j.contains("kahler_variables")) {
            std::set<std::string> vars;
            for (const auto &[name, v] : values) {
                vars.insert(name);
            }
            for (const auto *ls : {&kahler->alpha_labels, &kahler->beta_labels}) {
                for (const Monomial &m : *ls) {
                    for (const auto &[name, e] : m.exponents()) {
                        vars.insert(name);
                    }
                }
            }
            kahler->variables.assign(vars.begin(), vars.end());
        }
        kahler->values = values;
    }

    RunConfig cfg;
    cfg.geometry = StripGeometry(std::move(alpha_values), std::move(beta_values), framing, std::move(kahler));
    cfg.g_max = as_integer<int>(j, "g_max", cfg.g_max);
    cfg.precision_bits = as_integer<long>(j, "precision_bits", default_precision());
    cfg.q_order = as_integer<int>(j, "q_order", cfg.q_order);
    cfg.degree = as_integer<int>(j, "degree", cfg.degree);
    cfg.seed = as_integer<unsigned long>(j, "seed", cfg.seed);
    return cfg;
}

RunConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config '" + path.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError("config '" + path.string() + "': " + e.what());
    }
    return parse_config(j);
}

} // namespace striptr::cli
