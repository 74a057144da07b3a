#pragma once

/// Command-line front end. `run` takes the arguments after the program name
/// and writes to the given streams, so the commands are testable in-process.
///
/// Exit codes: 0 ok, 1 violation, 2 usage error, 3 unsupported order or
/// resource limit.

#include "circulant/bigint.hpp"
#include "circulant/enumerators.hpp"
#include "circulant/error.hpp"
#include "circulant/identities.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/oracle.hpp"
#include "circulant/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace circulant::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnsupported = 3;

inline constexpr const char* kFormatEnv = "CIRCULANT_FORMAT";

enum class Format { text, csv, json };

inline std::optional<Format> parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return std::nullopt;
}

/// A usage problem found after parsing (conflicting flags and the like).
class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline CirculantClass require_class(const std::string& s) {
    auto c = parse_class(s);
    if (!c) throw UsageError("unknown class '" + s + "' (expected d, u, o, sd, su or t)");
    return *c;
}

inline std::string tagged(const BigInt& v, Provenance p) {
    return v.str() + " (" + std::string(provenance_tag(p)) + ")";
}

inline std::string joined(std::span<const BigInt> v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].str();
    return out;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// Left-aligned text table with two spaces between columns.
inline void print_columns(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::string cell = r[i];
            if (i + 1 < r.size()) cell.resize(width[i] + 2, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

inline CountResult compute(std::uint64_t n, CirculantClass cls, bool use_oracle, bool allow_slow) {
    if (use_oracle) {
        if (n > oracle::kHardMaxOrder) throw UnsupportedError("oracle: order " + std::to_string(n) + " is too large");
        return oracle::enumerate(static_cast<unsigned>(n), cls, {allow_slow});
    }
    if (!formula_supports(n, cls)) {
        throw UnsupportedError("no formula for class " + std::string(class_tag(cls)) + " at order " +
                               std::to_string(n) + "; rerun with --oracle for small orders");
    }
    return formula_count(n, cls);
}

// Formula first; the oracle only when asked for and within its gate.
inline std::optional<CountResult> table_cell(std::uint64_t n, CirculantClass cls, bool use_oracle, bool allow_slow) {
    if (formula_supports(n, cls)) return formula_count(n, cls);
    if (use_oracle && n >= 1 && n <= oracle::max_order(cls, allow_slow)) {
        return oracle::enumerate(static_cast<unsigned>(n), cls, {allow_slow});
    }
    return std::nullopt;
}

inline std::string column_name(CirculantClass c) { return "C_" + std::string(class_tag(c)); }

// ---- commands ----

struct CountArgs {
    std::uint64_t order = 0;
    std::string cls;
    bool poly = false;
    std::optional<std::size_t> valency;
    bool oracle = false;
    bool allow_slow = false;
};

inline int cmd_count(const CountArgs& a, Format fmt, std::ostream& out) {
    const CirculantClass cls = require_class(a.cls);
    if ((a.poly || a.valency) && !has_valency_series(cls)) {
        throw UsageError("class " + a.cls + " has no valency series");
    }
    if (a.valency && *a.valency >= a.order) throw UsageError("valency must be below the order");
    const CountResult r = compute(a.order, cls, a.oracle, a.allow_slow);
    switch (fmt) {
    case Format::json: out << io::to_json(r).dump() << "\n"; break;
    case Format::csv:
        out << "n,class,total,provenance" << (a.valency ? ",r,count" : "") << (a.poly ? ",by_valency" : "") << "\n";
        out << r.order << "," << class_tag(cls) << "," << r.total << "," << provenance_tag(r.provenance);
        if (a.valency) out << "," << *a.valency << "," << r.at_valency(*a.valency);
        if (a.poly) out << "," << joined(r.by_valency->coefficients(), ";");
        out << "\n";
        break;
    case Format::text:
        out << tagged(r.total, r.provenance) << "\n";
        if (a.valency) out << "valency " << *a.valency << ": " << tagged(r.at_valency(*a.valency), r.provenance) << "\n";
        if (a.poly) {
            out << "by valency: " << joined(r.by_valency->coefficients(), ",") << " (" << provenance_tag(r.provenance)
                << ")\n";
        }
        break;
    }
    return kOk;
}

struct TableArgs {
    int which = 1;
    std::optional<std::uint64_t> max;
    std::vector<std::uint64_t> orders;
    std::vector<std::string> classes;
    bool oracle = false;
    bool allow_slow = false;
    bool strict = false;
};

inline std::vector<std::uint64_t> table_orders(const TableArgs& a) {
    if (a.max && !a.orders.empty()) throw UsageError("--max and --orders are mutually exclusive");
    if (!a.orders.empty()) return a.orders;
    if (a.which == 2 && !a.max) throw UsageError("table 2 needs --orders or --max");
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = a.which == 1 ? 2 : 3; n <= a.max.value_or(50); ++n) {
        if (a.which == 1 || formula_supports(n, CirculantClass::d) || a.oracle) out.push_back(n);
    }
    return out;
}

inline int cmd_table1(const TableArgs& a, Format fmt, std::ostream& out) {
    std::vector<CirculantClass> classes;
    for (const auto& c : a.classes) classes.push_back(require_class(c));
    if (classes.empty()) classes.assign(kAllClasses.begin(), kAllClasses.end());

    bool missing = false;
    std::vector<std::vector<std::string>> text_rows;
    std::vector<std::string> header{"n"};
    for (auto c : classes) header.push_back(column_name(c));
    if (fmt == Format::text) text_rows.push_back(header);
    if (fmt == Format::csv) {
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << ",provenance\n";
    }
    for (auto n : table_orders(a)) {
        std::vector<std::string> cells{std::to_string(n)};
        std::vector<std::string> prov;
        io::Json rec;
        rec["n"] = n;
        io::Json prov_rec = io::Json::object();
        for (auto c : classes) {
            auto r = table_cell(n, c, a.oracle, a.allow_slow);
            if (!r) missing = true;
            const std::string value = r ? r->total.str() : "n/a";
            const std::string source = r ? std::string(provenance_tag(r->provenance)) : "none";
            cells.push_back(fmt == Format::text && r ? tagged(r->total, r->provenance) : value);
            prov.push_back(source);
            rec[column_name(c)] = value;
            prov_rec[column_name(c)] = source;
        }
        if (fmt == Format::text) {
            text_rows.push_back(cells);
        } else if (fmt == Format::csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
            out << ",";
            for (std::size_t i = 0; i < prov.size(); ++i) out << (i ? "/" : "") << prov[i];
            out << "\n";
        } else {
            rec["provenance"] = prov_rec;
            out << rec.dump() << "\n";
        }
    }
    if (fmt == Format::text) print_columns(out, text_rows);
    return missing && a.strict ? kUnsupported : kOk;
}

inline int cmd_table2(const TableArgs& a, Format fmt, std::ostream& out) {
    if (a.classes.size() > 1) throw UsageError("table 2 takes a single --class");
    const CirculantClass cls = require_class(a.classes.empty() ? "u" : a.classes.front());
    if (!has_valency_series(cls)) throw UsageError("table 2 needs class d, u or o");

    bool missing = false;
    std::vector<std::uint64_t> orders;
    std::vector<CountResult> cols;
    for (auto n : table_orders(a)) {
        auto r = table_cell(n, cls, a.oracle, a.allow_slow);
        if (!r) {
            missing = true;
            continue;
        }
        orders.push_back(n);
        cols.push_back(*r);
    }
    if (fmt == Format::json) {
        for (const auto& c : cols) out << io::to_json(c).dump() << "\n";
        return missing && a.strict ? kUnsupported : kOk;
    }
    std::uint64_t top = 0;
    for (auto n : orders) top = std::max(top, n - 1);
    const std::uint64_t step = cls == CirculantClass::u ? 2 : 1;

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"r"}, src{"provenance"};
    for (std::size_t i = 0; i < cols.size(); ++i) {
        head.push_back(std::to_string(orders[i]));
        src.push_back(std::string(provenance_tag(cols[i].provenance)));
    }
    rows.push_back(head);
    rows.push_back(src);
    for (std::uint64_t r = 0; r <= top; r += step) {
        std::vector<std::string> row{std::to_string(r)};
        for (std::size_t i = 0; i < cols.size(); ++i) row.push_back(r < orders[i] ? cols[i].at_valency(r).str() : "");
        rows.push_back(row);
    }
    if (fmt == Format::csv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
    } else {
        out << "c_" << class_tag(cls) << "(n,r)" << (cls == CirculantClass::u ? ", r even" : "") << "\n";
        print_columns(out, rows);
        for (auto n : table_orders(a)) {
            if (std::find(orders.begin(), orders.end(), n) == orders.end()) out << "n/a: " << n << "\n";
        }
    }
    return missing && a.strict ? kUnsupported : kOk;
}

struct VerifyArgs {
    std::vector<std::string> keys;
    bool all = false;
    std::uint64_t max = 100;
};

inline std::string orders_text(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline int cmd_verify(const VerifyArgs& a, Format fmt, std::ostream& out) {
    if (a.all == !a.keys.empty()) throw UsageError("give either --all or one or more --identity keys");
    for (const auto& k : a.keys) {
        if (!identities::is_known_key(k)) throw UsageError("unknown identity key " + k);
    }
    const auto keys = a.all ? identities::all_keys() : a.keys;
    const auto summary = identities::verify_range(keys, a.max);
    switch (fmt) {
    case Format::json:
        for (const auto& r : summary.reports) out << io::to_json(r).dump() << "\n";
        break;
    case Format::csv:
        out << "key,orders,status,elapsed_ns\n";
        for (const auto& r : summary.reports) {
            out << csv_quote(r.key) << "," << csv_quote(orders_text(r.orders)) << ","
                << identities::status_tag(r.status) << "," << r.elapsed.count() << "\n";
        }
        break;
    case Format::text:
        out << io::identity_table(summary.reports);
        for (const auto& r : summary.reports) {
            const bool show = !a.all || r.status == identities::Status::fails;
            if (!show) continue;
            out << r.key << " at " << orders_text(r.orders) << ": " << identities::status_tag(r.status);
            if (!identities::is_lemma(r.key) && r.lhs.size() + r.rhs.size() < 120) out << "  " << r.lhs << " vs " << r.rhs;
            out << "\n";
        }
        out << summary.holds << " holds, " << summary.fails << " fails\n";
        break;
    }
    return summary.any_fail() ? kViolation : kOk;
}

struct PrimesArgs {
    bool nearly_doubled = false;
    std::optional<std::uint64_t> limit;
    bool chain = false;
    std::optional<std::uint64_t> ptilde;
    std::optional<unsigned> kmax;
    unsigned mr_rounds = nt::kDefaultMillerRabinRounds;
};

inline BigInt chain_member(std::uint64_t ptilde, unsigned k) { return BigInt(ptilde) * (BigInt(1) << k) + 1; }

inline int cmd_primes(const PrimesArgs& a, Format fmt, std::ostream& out) {
    if (a.nearly_doubled == a.chain) throw UsageError("give exactly one of --nearly-doubled and --chain");
    if (a.nearly_doubled) {
        if (!a.limit) throw UsageError("--nearly-doubled needs --limit");
        const auto pairs = nt::nearly_doubled_primes(*a.limit);
        if (fmt == Format::csv) out << "q,p\n";
        for (const auto& pp : pairs) {
            if (fmt == Format::json) out << io::Json{{"q", std::to_string(pp.q)}, {"p", std::to_string(pp.p)}}.dump() << "\n";
            else if (fmt == Format::csv) out << pp.q << "," << pp.p << "\n";
            else out << pp.q << " " << pp.p << "\n";
        }
        if (fmt == Format::text) out << pairs.size() << " pairs\n";
        return kOk;
    }
    if (!a.ptilde || !a.kmax) throw UsageError("--chain needs --ptilde and --kmax");
    if (*a.ptilde % 2 == 0) throw UsageError("--ptilde must be odd");
    const auto ks = nt::cunningham_pairs(*a.ptilde, *a.kmax, a.mr_rounds);
    if (fmt == Format::csv) out << "ptilde,k,q,p\n";
    for (auto k : ks) {
        const BigInt q = chain_member(*a.ptilde, k), p = chain_member(*a.ptilde, k + 1);
        if (fmt == Format::json) {
            out << io::Json{{"ptilde", std::to_string(*a.ptilde)}, {"k", k}, {"q", q.str()}, {"p", p.str()}}.dump()
                << "\n";
        } else if (fmt == Format::csv) {
            out << *a.ptilde << "," << k << "," << q << "," << p << "\n";
        } else {
            out << "k=" << k << ": " << q << " " << p << "\n";
        }
    }
    if (fmt == Format::text) out << ks.size() << " pairs\n";
    return kOk;
}

struct LogConcaveArgs {
    std::uint64_t order = 0;
    bool oracle = false;
    bool allow_slow = false;
};

inline int cmd_logconcave(const LogConcaveArgs& a, Format fmt, std::ostream& out) {
    const CountResult r = compute(a.order, CirculantClass::u, a.oracle, a.allow_slow);
    const auto bad = log_concavity_violations(*r.by_valency, a.order);
    switch (fmt) {
    case Format::json: {
        io::Json j;
        j["order"] = a.order;
        j["provenance"] = std::string(provenance_tag(r.provenance));
        j["log_concave"] = bad.empty();
        j["violations"] = bad;
        out << j.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "n,provenance,log_concave,violations\n"
            << a.order << "," << provenance_tag(r.provenance) << "," << (bad.empty() ? "true" : "false") << ","
            << csv_quote(orders_text(bad)) << "\n";
        break;
    case Format::text:
        out << a.order << ": ";
        if (bad.empty()) out << "log-concave";
        else out << "violation at r=" << orders_text(bad);
        out << " (" << provenance_tag(r.provenance) << ")\n";
        break;
    }
    return bad.empty() ? kOk : kViolation;
}

struct OracleArgs {
    std::uint64_t order = 0;
    std::string cls = "d";
    bool allow_slow = false;
};

inline unsigned oracle_order(std::uint64_t n) {
    if (n > oracle::kHardMaxOrder) throw UnsupportedError("oracle: order " + std::to_string(n) + " is too large");
    return static_cast<unsigned>(n);
}

inline int cmd_representatives(const OracleArgs& a, Format fmt, std::ostream& out) {
    const CirculantClass cls = require_class(a.cls);
    const auto classes = oracle::isomorphism_classes(oracle_order(a.order), cls, {a.allow_slow});
    if (fmt == Format::csv) out << "n;valency;representative;class_size\n";
    for (const auto& c : classes) {
        if (fmt == Format::json) {
            io::Json j;
            j["order"] = c.order;
            j["valency"] = c.valency;
            j["representative"] = c.representative.member_list();
            j["class_size"] = std::to_string(c.class_size);
            out << j.dump() << "\n";
        } else {
            out << io::representative_line(c) << "\n";
        }
    }
    return kOk;
}

inline int cmd_classify(const OracleArgs& a, Format fmt, std::ostream& out) {
    if (a.order % 2 == 0) throw UsageError("classify needs an odd order");
    const auto part = oracle::classify_self_complementary(oracle_order(a.order), {a.allow_slow});
    switch (fmt) {
    case Format::json:
        out << io::Json{{"order", a.order},
                        {"undirected", std::to_string(part.undirected)},
                        {"tournament", std::to_string(part.tournament)},
                        {"mixed", std::to_string(part.mixed)},
                        {"provenance", "oracle"}}
                   .dump()
            << "\n";
        break;
    case Format::csv:
        out << "n,undirected,tournament,mixed,provenance\n"
            << a.order << "," << part.undirected << "," << part.tournament << "," << part.mixed << ",oracle\n";
        break;
    case Format::text:
        out << "undirected " << part.undirected << ", tournament " << part.tournament << ", mixed " << part.mixed
            << " (oracle)\n";
        break;
    }
    return kOk;
}

} // namespace detail

/// Parses and runs one command line.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of circulant graphs", "circulant"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "text, csv or json")
        ->envname(kFormatEnv)
        ->check(CLI::IsMember({"text", "csv", "json"}));

    detail::CountArgs count;
    auto* c = app.add_subcommand("count", "number of circulants of one order and class")->fallthrough();
    c->add_option("--order", count.order)->required()->check(CLI::PositiveNumber);
    c->add_option("--class", count.cls)->required();
    c->add_flag("--poly", count.poly, "print the valency series");
    c->add_option("--valency", count.valency, "print one coefficient");
    c->add_flag("--oracle", count.oracle, "count by brute-force isomorphism");
    c->add_flag("--allow-slow", count.allow_slow);

    detail::TableArgs table;
    auto* t = app.add_subcommand("table", "reproduce the order table (1) or valency table (2)")->fallthrough();
    t->add_option("which", table.which)->required()->check(CLI::IsMember({1, 2}));
    t->add_option("--max", table.max)->check(CLI::PositiveNumber);
    t->add_option("--orders", table.orders)->delimiter(',')->check(CLI::PositiveNumber);
    t->add_option("--class", table.classes)->delimiter(',');
    t->add_flag("--oracle", table.oracle);
    t->add_flag("--allow-slow", table.allow_slow);
    t->add_flag("--strict", table.strict, "exit 3 if any cell is unsupported");

    detail::VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check identities on every applicable order")->fallthrough();
    v->add_option("--identity", verify.keys)->delimiter(',');
    v->add_flag("--all", verify.all);
    v->add_option("--max", verify.max)->check(CLI::PositiveNumber);

    detail::PrimesArgs primes;
    auto* p = app.add_subcommand("primes", "nearly doubled primes and chain searches")->fallthrough();
    p->add_flag("--nearly-doubled", primes.nearly_doubled);
    p->add_option("--limit", primes.limit);
    p->add_flag("--chain", primes.chain);
    p->add_option("--ptilde", primes.ptilde)->check(CLI::PositiveNumber);
    p->add_option("--kmax", primes.kmax);
    p->add_option("--mr-rounds", primes.mr_rounds)->check(CLI::PositiveNumber);

    detail::LogConcaveArgs logc;
    auto* l = app.add_subcommand("logconcave", "log-concavity of the undirected valency series")->fallthrough();
    l->add_option("--order", logc.order)->required()->check(CLI::PositiveNumber);
    l->add_flag("--oracle", logc.oracle);
    l->add_flag("--allow-slow", logc.allow_slow);

    detail::OracleArgs reps;
    auto* r = app.add_subcommand("representatives", "oracle classes with lex-least representatives")->fallthrough();
    r->add_option("--order", reps.order)->required()->check(CLI::PositiveNumber);
    r->add_option("--class", reps.cls)->required();
    r->add_flag("--allow-slow", reps.allow_slow);

    detail::OracleArgs split;
    auto* s = app.add_subcommand("classify", "split self-complementary classes of odd order")->fallthrough();
    s->add_option("--order", split.order)->required()->check(CLI::PositiveNumber);
    s->add_flag("--allow-slow", split.allow_slow);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    auto* format_opt = app.get_option("--format");
    if (format_opt->count() == 0) {
        if (const char* env = std::getenv(kFormatEnv)) format = env;
    }
    const auto parsed_format = parse_format(format);
    if (!parsed_format) {
        err << "error: --format: " << format << " is not one of text, csv, json\n";
        return kUsage;
    }
    const Format fmt = *parsed_format;
    try {
        if (c->parsed()) return detail::cmd_count(count, fmt, out);
        if (t->parsed()) return table.which == 1 ? detail::cmd_table1(table, fmt, out) : detail::cmd_table2(table, fmt, out);
        if (v->parsed()) return detail::cmd_verify(verify, fmt, out);
        if (p->parsed()) return detail::cmd_primes(primes, fmt, out);
        if (l->parsed()) return detail::cmd_logconcave(logc, fmt, out);
        if (r->parsed()) return detail::cmd_representatives(reps, fmt, out);
        if (s->parsed()) return detail::cmd_classify(split, fmt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kUnsupported;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kViolation;
    }
    return kUsage;
}

} // namespace circulant::cli
