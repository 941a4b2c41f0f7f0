#include "kacpoly/io.hpp"

#include "kacpoly/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kacpoly {

std::optional<Quiver> builtin_quiver(const std::string& name)
{
    using Named = std::vector<std::pair<std::string, std::string>>;
    if (name == "a1")
        return Quiver({"1"}, Named{});
    if (name == "a2")
        return Quiver({"1", "2"}, Named{{"1", "2"}});
    if (name == "a3")
        return Quiver({"1", "2", "3"}, Named{{"1", "2"}, {"2", "3"}});
    if (name == "d4")
        return Quiver({"1", "2", "3", "4"}, Named{{"1", "4"}, {"2", "4"}, {"3", "4"}});
    if (name == "triangle")
        return Quiver({"1", "2", "3"}, Named{{"1", "2"}, {"3", "1"}, {"3", "2"}});
    const std::string prefix = "kronecker";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
        int m = 0;
        const char* first = name.data() + prefix.size();
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last || m < 0)
            return std::nullopt;
        return Quiver({"1", "2"}, Named(static_cast<std::size_t>(m), {"1", "2"}));
    }
    return std::nullopt;
}

Quiver quiver_from_json(const Json& doc)
{
    try {
        if (!doc.is_object() || !doc.contains("vertices"))
            throw DomainError("quiver document needs a \"vertices\" array");
        std::vector<std::string> vertices;
        for (const auto& v : doc.at("vertices")) {
            if (v.is_string())
                vertices.push_back(v.get<std::string>());
            else if (v.is_number_integer())
                vertices.push_back(std::to_string(v.get<long>()));
            else
                throw DomainError("vertex identifiers must be strings or integers");
        }
        auto name_of = [](const Json& v) {
            return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
        };
        std::vector<std::pair<std::string, std::string>> arrows;
        if (doc.contains("arrows"))
            for (const auto& a : doc.at("arrows"))
                arrows.emplace_back(name_of(a.at("from")), name_of(a.at("to")));
        return Quiver(std::move(vertices), arrows);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed quiver document: ") + e.what());
    }
}

Json quiver_to_json(const Quiver& q)
{
    Json doc;
    doc["vertices"] = q.vertices();
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"from", q.vertices()[a.source]}, {"to", q.vertices()[a.target]}});
    doc["arrows"] = std::move(arrows);
    return doc;
}

Quiver load_quiver(const std::string& name_or_path)
{
    if (auto q = builtin_quiver(name_or_path))
        return *q;
    std::ifstream in(name_or_path);
    if (!in)
        throw DomainError("cannot open quiver file '" + name_or_path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("cannot parse quiver file '" + name_or_path + "': " + e.what());
    }
    return quiver_from_json(doc);
}

DimVector parse_dim_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw DomainError("empty entry in vector '" + text + "'");
        item = item.substr(b, e - b + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw DomainError("not an integer: '" + item + "' in '" + text + "'");
        if (v < 0)
            throw DomainError("negative entry in '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw DomainError("empty vector");
    return DimVector(std::move(out));
}

Json polynomial_to_json(const Polynomial& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(c.get_str());
    return arr;
}

Polynomial polynomial_from_json(const Json& coefficients)
{
    std::vector<mpz_class> c;
    for (const auto& x : coefficients) {
        mpz_class v;
        const std::string s = x.is_string() ? x.get<std::string>() : x.dump();
        if (v.set_str(s, 10) != 0)
            throw DomainError("not an integer coefficient: " + s);
        c.push_back(v);
    }
    return Polynomial(std::move(c));
}

Json ratfunc_to_json(const RationalFunction& f)
{
    Json doc;
    doc["num"] = polynomial_to_json(f.numerator());
    doc["den"] = polynomial_to_json(f.denominator());
    return doc;
}

RationalFunction ratfunc_from_json(const Json& doc)
{
    return RationalFunction(polynomial_from_json(doc.at("num")),
                            polynomial_from_json(doc.at("den")));
}

Json dimvector_to_json(const DimVector& v)
{
    return Json(v.vec());
}

} // namespace kacpoly
