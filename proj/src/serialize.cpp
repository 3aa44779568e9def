#include "ringforge/serialize.hpp"

namespace ringforge {

namespace {

Int parse_int_at(const std::string& s, size_t base_pos) {
    if (s.empty()) throw ParseError("expected integer", base_pos);
    size_t i = s[0] == '-' ? 1 : 0;
    if (i >= s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
        throw ParseError("bad integer '" + s + "'", base_pos);
    return Int(s);
}

Rat parse_rat_at(const std::string& s, size_t base_pos) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int_at(s, base_pos));
    Int num = parse_int_at(s.substr(0, slash), base_pos);
    Int den = parse_int_at(s.substr(slash + 1), base_pos + slash + 1);
    if (den <= 0) throw ParseError("denominator must be positive", base_pos + slash + 1);
    return Rat(num, den);
}

std::pair<Int, Int> parse_pair_at(const std::string& s, size_t base_pos) {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected pair '(a,b)'", base_pos);
    std::string body = s.substr(1, s.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("expected ',' in pair", base_pos + 1);
    Int a = parse_int_at(body.substr(0, comma), base_pos + 1);
    Int b = parse_int_at(body.substr(comma + 1), base_pos + comma + 2);
    return {a, b};
}

} // namespace

GroupKind parse_group_kind(const std::string& s) {
    if (s == "Z") return GroupKind::DiscreteZ;
    if (s == "Q") return GroupKind::DenseQ;
    if (s == "Z2lex") return GroupKind::LexZ2;
    throw ParseError("unknown group kind '" + s + "' (expected Z, Q, Z2lex)", 0);
}

GroupElement parse_group_element(GroupKind kind, const std::string& s) {
    switch (kind) {
    case GroupKind::DiscreteZ:
        return GroupElement::integer(kind, parse_int_at(s, 0));
    case GroupKind::DenseQ:
        return GroupElement::rational(parse_rat_at(s, 0));
    case GroupKind::LexZ2: {
        auto [a, b] = parse_pair_at(s, 0);
        return GroupElement::pair(a, b);
    }
    }
    throw ParseError("bad group element", 0);
}

Cut parse_cut(GroupKind kind, const std::string& s) {
    if (s == "zero") return Cut::zero(kind);
    if (s == "full") return Cut::full(kind);
    if (s.rfind("closed:", 0) == 0) return Cut::closed(parse_group_element(kind, s.substr(7)));
    if (s.rfind("open:", 0) == 0) return Cut::open(parse_group_element(kind, s.substr(5)));
    if (s.rfind("row:", 0) == 0) {
        if (kind != GroupKind::LexZ2)
            throw ParseError("row cuts exist only over Z2lex", 0);
        return Cut::row(parse_int_at(s.substr(4), 4));
    }
    throw ParseError("bad cut '" + s + "' (expected zero|full|closed:v|open:v|row:a)", 0);
}

ValElement parse_val_element(GroupKind kind, const std::string& s) {
    if (s == "0") return ValElement::zero(kind);
    Rat coeff(1);
    std::string rest = s;
    size_t base = 0;
    size_t star = s.find("*t^");
    if (star != std::string::npos) {
        coeff = parse_rat_at(s.substr(0, star), 0);
        rest = s.substr(star + 1);
        base = star + 1;
    } else if (s.rfind("-t^", 0) == 0) {
        coeff = -1;
        rest = s.substr(1);
        base = 1;
    }
    if (rest.rfind("t^", 0) != 0)
        throw ParseError("bad element '" + s + "' (expected [c*]t^v or 0)", base);
    if (coeff == 0) throw ParseError("zero coefficient; write 0", 0);
    GroupElement v = parse_group_element(kind, rest.substr(2));
    if (!v.is_nonneg()) throw ParseError("element value must be nonnegative", base + 2);
    return ValElement::term(coeff, v);
}

ValQuotient parse_valq(const std::string& s) {
    if (s.rfind("valq:", 0) != 0) throw ParseError("expected valq:<group>:<cut>", 0);
    size_t second = s.find(':', 5);
    if (second == std::string::npos) throw ParseError("expected ':' after group kind", 5);
    GroupKind kind = parse_group_kind(s.substr(5, second - 5));
    Cut modulus = parse_cut(kind, s.substr(second + 1));
    return ValQuotient(kind, modulus);
}

Json descriptor_to_json(const SubmoduleDescriptor& d) {
    Json j;
    j["const"] = d.const_cut().str();
    Json tail;
    switch (d.tail().kind()) {
    case TailRule::Kind::Uniform:
        tail["uniform"] = d.tail().uniform_cut().str();
        break;
    case TailRule::Kind::Arithmetic:
        tail["arithmetic"] = Json{{"base", d.tail().base().str()}, {"step", d.tail().step().str()}};
        break;
    case TailRule::Kind::Geometric:
        tail["geometric"] =
            Json{{"limit", GroupElement::rational(d.tail().limit()).str()},
                 {"amp", GroupElement::rational(d.tail().amp()).str()}};
        break;
    }
    j["tail"] = tail;
    Json ov = Json::object();
    for (const auto& [i, c] : d.overrides()) ov[i.str()] = c.str();
    j["overrides"] = ov;
    return j;
}

SubmoduleDescriptor descriptor_from_json(GroupKind kind, const Json& j) {
    if (!j.is_object() || !j.contains("const") || !j.contains("tail"))
        throw ParseError("descriptor JSON needs 'const' and 'tail'", 0);
    Cut c = parse_cut(kind, j.at("const").get<std::string>());
    const Json& t = j.at("tail");
    TailRule tail = TailRule::uniform(Cut::full(kind));
    if (t.contains("uniform")) {
        tail = TailRule::uniform(parse_cut(kind, t.at("uniform").get<std::string>()));
    } else if (t.contains("arithmetic")) {
        const Json& a = t.at("arithmetic");
        tail = TailRule::arithmetic(parse_group_element(kind, a.at("base").get<std::string>()),
                                    parse_group_element(kind, a.at("step").get<std::string>()));
    } else if (t.contains("geometric")) {
        if (kind != GroupKind::DenseQ)
            throw ParseError("geometric tails exist only over Q", 0);
        const Json& g = t.at("geometric");
        Rat limit = parse_group_element(kind, g.at("limit").get<std::string>()).first();
        Rat amp = parse_group_element(kind, g.at("amp").get<std::string>()).first();
        tail = TailRule::geometric(limit, amp);
    } else {
        throw ParseError("descriptor tail must be uniform, arithmetic, or geometric", 0);
    }
    std::map<Int, Cut> ov;
    if (j.contains("overrides")) {
        for (const auto& [key, val] : j.at("overrides").items())
            ov.emplace(parse_int_at(key, 0), parse_cut(kind, val.get<std::string>()));
    }
    return SubmoduleDescriptor(std::move(c), std::move(tail), std::move(ov));
}

Json fun_element_to_json(const FunElement& f) {
    Json j;
    j["default"] = f.default_value().str();
    Json ov = Json::object();
    for (const auto& [i, v] : f.overrides()) ov[i.str()] = v.str();
    j["overrides"] = ov;
    return j;
}

FunElement fun_element_from_json(GroupKind kind, const Json& j) {
    if (!j.is_object() || !j.contains("default"))
        throw ParseError("element JSON needs 'default'", 0);
    ValElement d = parse_val_element(kind, j.at("default").get<std::string>());
    std::map<Int, ValElement> ov;
    if (j.contains("overrides")) {
        for (const auto& [key, val] : j.at("overrides").items())
            ov.emplace(parse_int_at(key, 0), parse_val_element(kind, val.get<std::string>()));
    }
    return FunElement(std::move(d), std::move(ov));
}

Json sring_to_json(const SRingQuotient& r) {
    Json j;
    j["kind"] = group_kind_name(r.kind);
    j["modulus"] = descriptor_to_json(r.modulus);
    return j;
}

SRingQuotient sring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("modulus"))
        throw ParseError("ring JSON needs 'kind' and 'modulus'", 0);
    GroupKind kind = parse_group_kind(j.at("kind").get<std::string>());
    return SRingQuotient(kind, descriptor_from_json(kind, j.at("modulus")));
}

} // namespace ringforge
