#include "jetcalc/cli.hpp"

#include "jetcalc/compare.hpp"
#include "jetcalc/extended.hpp"
#include "jetcalc/hasse.hpp"
#include "jetcalc/jets.hpp"
#include "jetcalc/parse.hpp"
#include "jetcalc/render.hpp"
#include "jetcalc/solve.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace jetcalc {

namespace {

const std::map<std::string, std::string> demo_texts = {
    {"nodal", R"(# plane node: two transversal lines through the origin
[ring]
vars: x:1, y:1
ideal: x*y

[module]
gens: dx:1, dy:1
rels: y*dx + x*dy

[derivation]
degree: 0
D(x) = dx
D(y) = dy

[options]
degree: 0
)"},
    {"nongorenstein", R"(# coordinate ring of the monomial curve (t^3, t^4, t^5)
# with the module of regular meromorphic differential values
[ring]
vars: x:3, y:4, z:5
ideal: y^2 - x*z, x^3 - y*z, x^2*y - z^2

[module]
gens: n1:-2, n2:-3
rels: x*n1 - y*n2, y*n1 - z*n2, z*n1 - x^2*n2

[derivation]
degree: -1
D(x) = 3*y*n1
D(y) = 4*z*n1
D(z) = 5*x^2*n1

[connection]
degree: -1
G(n1) = 4*x*(n2@n2)
G(n2) = 3*(n1@n1)

[options]
degree: -1
)"},
    {"taylor", R"(# free rank-2 module with commuting coordinate derivations
[ring]
vars: x1:1, x2:1

[module]
gens: e1:1, e2:1

[derivation]
degree: 0
D(x1) = e1
D(x2) = e2

[connection]
degree: 0
G(e1) = 0
G(e2) = 0
)"}};

struct Usage : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Args {
	std::string sub;
	std::vector<std::string> pos;
	std::map<std::string, std::string> flags;
	bool flat = false;
};

Args parse_args(const std::vector<std::string> &argv)
{
	Args a;
	if (argv.empty())
		throw Usage("missing subcommand");
	a.sub = argv[0];
	for (size_t i = 1; i < argv.size(); ++i) {
		const std::string &s = argv[i];
		if (s == "--flat") {
			a.flat = true;
		} else if (s == "--order" || s == "--degree" || s == "--seed" || s == "--var") {
			if (i + 1 >= argv.size())
				throw Usage(s + " needs a value");
			a.flags[s.substr(2)] = argv[++i];
		} else if (s.rfind("--", 0) == 0) {
			throw Usage("unknown flag " + s);
		} else {
			a.pos.push_back(s);
		}
	}
	return a;
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

long to_long(const std::string &s, const std::string &what)
{
	try {
		size_t used = 0;
		long v = std::stol(s, &used);
		if (used != s.size())
			throw std::invalid_argument("");
		return v;
	} catch (...) {
		throw Usage("invalid " + what + " '" + s + "'");
	}
}

struct Session {
	std::ostream &out;
	int status = 0;

	void verdict(const std::string &name, const std::string &v)
	{
		out << "VERDICT " << name << " " << v << "\n";
		if (v == "FAIL" || v == "INFEASIBLE")
			status = std::max(status, 1);
	}
	void verdict(const std::string &name, bool pass) { verdict(name, pass ? "PASS" : "FAIL"); }
	void issues(const ValidationReport &r)
	{
		for (auto &i : r.issues)
			out << "issue: " << i.where << ": " << i.message << "\n";
	}
};

bool check_presentation(Session &s, const Scenario &scn)
{
	auto r = validate_presentation(scn.ring, scn.module);
	s.verdict("presentation", r.ok());
	s.issues(r);
	return r.ok();
}

bool check_derivation(Session &s, const Scenario &scn, const GradedContext &ctx)
{
	auto r = validate_derivation(scn.derivation, ctx);
	s.verdict("derivation", r.ok());
	s.issues(r);
	return r.ok();
}

const Connection &need_connection(const Scenario &scn)
{
	if (!scn.connection)
		throw std::runtime_error("scenario has no [connection] section");
	return *scn.connection;
}

bool check_connection(Session &s, const Scenario &scn, const GradedContext &ctx)
{
	auto r = validate_connection(need_connection(scn), scn.derivation, ctx);
	s.verdict("connection", r.ok());
	s.issues(r);
	return r.ok();
}

uint32_t order_of(const Args &a, const Scenario &scn)
{
	if (auto it = a.flags.find("order"); it != a.flags.end()) {
		long v = to_long(it->second, "order");
		if (v < 0)
			throw Usage("--order must be non-negative");
		return uint32_t(v);
	}
	return scn.options.order;
}

uint64_t seed_of(const Args &a, const Scenario &scn)
{
	if (auto it = a.flags.find("seed"); it != a.flags.end())
		return uint64_t(to_long(it->second, "seed"));
	return scn.options.seed;
}

int axiom_weight_cap(const RingPresentation &ring)
{
	int w = 1;
	for (auto &v : ring.vars)
		w = std::max(w, v.weight);
	return std::max(4, 2 * w + 1);
}

void do_solve(Session &s, const Scenario &scn, const GradedContext &ctx, int degree, bool flat)
{
	ConnectionSearch res = solve_connection(scn.derivation, degree, flat, ctx);
	s.out << "searching degree " << degree << (flat ? " (flat required)" : "") << "\n";
	if (res.feasible) {
		s.verdict("solve-connection", "FEASIBLE");
		for (size_t g = 0; g < ctx.ngens(); ++g)
			s.out << "G(" << ctx.module().gens[g].name
			      << ") = " << render_expression(res.connection.values[g], scn.ring, scn.module)
			      << "\n";
	} else {
		s.verdict("solve-connection", "INFEASIBLE");
		s.out << "obstruction check: " << res.obstruction_check << "\n";
		s.out << "obstruction weight: " << res.obstruction_weight << "\n";
		s.out << "obstruction: " << render_expression(res.obstruction, scn.ring, scn.module)
		      << "\n";
		s.out << "certificate: "
		      << (res.absolute ? "absolute (no connection of any degree)"
		                       : "per-degree (degree " + std::to_string(degree) + " only)")
		      << "\n";
	}
}

void do_extend(Session &s, const Scenario &scn, const GradedContext &ctx, uint32_t order)
{
	const Connection &c = need_connection(scn);
	bool flat = is_flat_connection(c, scn.derivation, ctx);
	s.verdict("flat", flat);
	if (!flat)
		return;
	ExtendedConnection t = extend_flat(c, order, scn.derivation, ctx);
	for (uint32_t i = 0; i <= t.order; ++i)
		for (size_t g = 0; g < ctx.ngens(); ++g)
			s.out << "T" << i << "(" << ctx.module().gens[g].name
			      << ") = " << render_expression(t.value(i, g), scn.ring, scn.module) << "\n";
	s.verdict("extended-valid", validate_extended(t, scn.derivation, ctx).ok());
	s.verdict("flat-extended", is_flat_extended(t, scn.derivation, ctx));
}

void do_hasse(Session &s, const Scenario &scn, const GradedContext &ctx, uint32_t order,
              uint64_t seed, const std::string &var_filter)
{
	if (order < 1)
		throw Usage("--order must be at least 1");
	const Connection &c = need_connection(scn);
	ExtendedConnection t = iterate_connection(c, order - 1, scn.derivation, ctx);
	HasseDerivation h = hasse_from_extended(t, scn.derivation, order, ctx);
	for (size_t v = 0; v < ctx.nvars(); ++v) {
		const std::string &name = ctx.ring().vars[v].name;
		if (!var_filter.empty() && name != var_filter)
			continue;
		for (uint32_t i = 1; i <= order; ++i)
			s.out << "h" << i << "(" << name
			      << ") = " << render_expression(h.var_value(i, v), scn.ring, scn.module) << "\n";
	}
	auto rep = check_hasse_axioms(h, 25, seed, axiom_weight_cap(ctx.ring()), ctx);
	s.verdict("hasse-axioms", rep.ok());
	if (!rep.ok())
		s.out << "failed at order " << rep.failure->order << " on a = "
		      << render_expression(rep.failure->a, scn.ring)
		      << ", b = " << render_expression(rep.failure->b, scn.ring) << "\n";
}

void require_same_setting(const Scenario &a, const Scenario &b)
{
	if (!(a.ring == b.ring && a.module == b.module && a.derivation == b.derivation))
		throw std::runtime_error("scenarios disagree on ring, module or derivation");
}

void do_compare(Session &s, const Scenario &sa, const Scenario &sb, const GradedContext &ctx,
                uint32_t order)
{
	const Connection &ca = need_connection(sa);
	const Connection &cb = need_connection(sb);
	bool flat = is_flat_connection(ca, sa.derivation, ctx);
	s.verdict("flat-reference", flat);
	if (!flat)
		return;
	ExtendedConnection t = extend_flat(ca, order, sa.derivation, ctx);
	ExtendedConnection u = iterate_connection(cb, order, sb.derivation, ctx);
	ComparisonMap lambda = compare_extended(t, u, sa.derivation, ctx);
	for (uint32_t i = 1; i <= lambda.order; ++i)
		for (size_t g = 0; g < ctx.ngens(); ++g)
			s.out << "L" << i << "(" << ctx.module().gens[g].name
			      << ") = " << render_expression(lambda.value(i, g), sa.ring, sa.module) << "\n";
	bool ok = true;
	for (uint32_t i = 1; i <= order && ok; ++i)
		for (size_t g = 0; g < ctx.ngens(); ++g) {
			TensorElement diff = u.value(i, g);
			for (uint32_t l = 0; l <= i; ++l)
				diff -= slotwise_substitute(lambda, i - l, t.value(l, g), ctx);
			if (!is_zero(diff, ctx)) {
				ok = false;
				break;
			}
		}
	s.verdict("compare", ok);
}

void do_cocycle(Session &s, const std::vector<Scenario> &scns, const GradedContext &ctx,
                uint32_t order)
{
	std::vector<ExtendedConnection> ts;
	std::vector<HasseDerivation> hs;
	for (size_t k = 0; k < 3; ++k) {
		const Connection &c = need_connection(scns[k]);
		bool flat = is_flat_connection(c, scns[k].derivation, ctx);
		s.verdict("flat-" + std::to_string(k + 1), flat);
		if (!flat)
			return;
		ts.push_back(extend_flat(c, order, scns[k].derivation, ctx));
		hs.push_back(hasse_from_extended(ts[k], scns[k].derivation, order, ctx));
	}
	const char *names[3] = {"12", "13", "23"};
	const size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
	for (size_t p = 0; p < 3; ++p) {
		auto phi = automorphism_from_comparison(
		    compare_extended(ts[pairs[p][0]], ts[pairs[p][1]], scns[0].derivation, ctx), ctx);
		s.verdict("equivalence-" + std::string(names[p]),
		          verify_equivalence(hs[pairs[p][0]], hs[pairs[p][1]], phi, order, ctx));
	}
	s.verdict("cocycle", cocycle_check(hs[0], hs[1], hs[2], order, ctx));
}

void do_taylor_demo(Session &s, const Scenario &scn, const GradedContext &ctx, uint32_t order)
{
	const Connection &c = need_connection(scn);
	ExtendedConnection t = iterate_connection(c, order, scn.derivation, ctx);
	HasseDerivation h = hasse_from_extended(t, scn.derivation, order, ctx);
	bool ok = true;
	for (uint32_t deg = 1; deg <= 3; ++deg)
		for (auto &m : weighted_monomials(int(deg), ctx.ring())) {
			Polynomial a = Polynomial::monomial(m);
			for (uint32_t q = 1; q <= order; ++q) {
				TensorElement got = hasse_apply(h, a, q, ctx);
				s.out << "h" << q << "(" << render_expression(a, scn.ring)
				      << ") = " << render_expression(got, scn.ring, scn.module) << "\n";
				if (!is_zero(got - hasse_commuting_closed_form(scn.derivation, a, q, ctx), ctx))
					ok = false;
			}
		}
	s.verdict("taylor-closed-form", ok);
}

const char *usage_text = R"(usage: jetcalc <subcommand> [arguments]

subcommands:
  validate <file>
  check-derivation <file>
  check-connection <file>
  check-flat <file>
  solve-connection <file> --degree d [--flat]
  extend <file> --order N
  hasse <file> --order N [--var v] [--seed s]
  compare <fileA> <fileB> --order N
  cocycle <fileA> <fileB> <fileC> --order N
  demo nodal|nongorenstein|taylor

flags: --order N (default 5), --degree d, --flat, --seed s, --var name
)";

int dispatch(const Args &a, std::ostream &out)
{
	Session s{out};

	auto load = [&](const std::string &path) { return parse_scenario(read_file(path)); };
	auto expect_pos = [&](size_t n) {
		if (a.pos.size() != n)
			throw Usage(a.sub + " expects " + std::to_string(n) + " file argument(s)");
	};

	if (a.sub == "validate") {
		expect_pos(1);
		Scenario scn = load(a.pos[0]);
		check_presentation(s, scn);
		return s.status;
	}
	if (a.sub == "check-derivation") {
		expect_pos(1);
		Scenario scn = load(a.pos[0]);
		GradedContext ctx = make_context(scn);
		if (check_presentation(s, scn))
			check_derivation(s, scn, ctx);
		return s.status;
	}
	if (a.sub == "check-connection" || a.sub == "check-flat") {
		expect_pos(1);
		Scenario scn = load(a.pos[0]);
		GradedContext ctx = make_context(scn);
		if (!check_presentation(s, scn) || !check_derivation(s, scn, ctx))
			return s.status;
		if (!check_connection(s, scn, ctx))
			return s.status;
		if (a.sub == "check-flat")
			s.verdict("flat", is_flat_connection(need_connection(scn), scn.derivation, ctx));
		return s.status;
	}
	if (a.sub == "solve-connection") {
		expect_pos(1);
		Scenario scn = load(a.pos[0]);
		GradedContext ctx = make_context(scn);
		if (!check_presentation(s, scn) || !check_derivation(s, scn, ctx))
			return s.status;
		int degree;
		if (auto it = a.flags.find("degree"); it != a.flags.end())
			degree = int(to_long(it->second, "degree"));
		else if (scn.options.degree)
			degree = *scn.options.degree;
		else
			throw Usage("solve-connection needs --degree");
		do_solve(s, scn, ctx, degree, a.flat);
		return s.status;
	}
	if (a.sub == "extend") {
		expect_pos(1);
		Scenario scn = load(a.pos[0]);
		GradedContext ctx = make_context(scn);
		if (!check_presentation(s, scn) || !check_derivation(s, scn, ctx) ||
		    !check_connection(s, scn, ctx))
			return s.status;
		do_extend(s, scn, ctx, order_of(a, scn));
		return s.status;
	}
	if (a.sub == "hasse") {
		expect_pos(1);
		Scenario scn = load(a.pos[0]);
		GradedContext ctx = make_context(scn);
		if (!check_presentation(s, scn) || !check_derivation(s, scn, ctx) ||
		    !check_connection(s, scn, ctx))
			return s.status;
		std::string var;
		if (auto it = a.flags.find("var"); it != a.flags.end())
			var = it->second;
		do_hasse(s, scn, ctx, order_of(a, scn), seed_of(a, scn), var);
		return s.status;
	}
	if (a.sub == "compare") {
		expect_pos(2);
		Scenario sa = load(a.pos[0]), sb = load(a.pos[1]);
		require_same_setting(sa, sb);
		GradedContext ctx = make_context(sa);
		if (!check_presentation(s, sa) || !check_derivation(s, sa, ctx))
			return s.status;
		if (!check_connection(s, sa, ctx))
			return s.status;
		{
			auto r = validate_connection(need_connection(sb), sb.derivation, ctx);
			s.verdict("connection-b", r.ok());
			s.issues(r);
			if (!r.ok())
				return s.status;
		}
		do_compare(s, sa, sb, ctx, order_of(a, sa));
		return s.status;
	}
	if (a.sub == "cocycle") {
		expect_pos(3);
		std::vector<Scenario> scns = {load(a.pos[0]), load(a.pos[1]), load(a.pos[2])};
		require_same_setting(scns[0], scns[1]);
		require_same_setting(scns[0], scns[2]);
		GradedContext ctx = make_context(scns[0]);
		if (!check_presentation(s, scns[0]) || !check_derivation(s, scns[0], ctx))
			return s.status;
		for (size_t k = 0; k < 3; ++k) {
			auto r = validate_connection(need_connection(scns[k]), scns[k].derivation, ctx);
			s.verdict("connection-" + std::to_string(k + 1), r.ok());
			if (!r.ok()) {
				s.issues(r);
				return s.status;
			}
		}
		do_cocycle(s, scns, ctx, order_of(a, scns[0]));
		return s.status;
	}
	if (a.sub == "demo") {
		expect_pos(1);
		Scenario scn = parse_scenario(demo_scenario_text(a.pos[0]));
		GradedContext ctx = make_context(scn);
		if (!check_presentation(s, scn) || !check_derivation(s, scn, ctx))
			return s.status;
		if (a.pos[0] == "nodal") {
			do_solve(s, scn, ctx, scn.options.degree.value_or(0), false);
		} else if (a.pos[0] == "nongorenstein") {
			if (!check_connection(s, scn, ctx))
				return s.status;
			do_extend(s, scn, ctx, order_of(a, scn));
		} else {
			if (!check_connection(s, scn, ctx))
				return s.status;
			do_taylor_demo(s, scn, ctx, order_of(a, scn));
		}
		return s.status;
	}
	throw Usage("unknown subcommand '" + a.sub + "'");
}

} // namespace

const std::string &demo_scenario_text(const std::string &name)
{
	auto it = demo_texts.find(name);
	if (it == demo_texts.end())
		throw Usage("unknown demo '" + name + "' (nodal, nongorenstein, taylor)");
	return it->second;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out)
{
	out << "# jetcalc";
	for (auto &a : args)
		out << " " << a;
	out << "\n";
	try {
		return dispatch(parse_args(args), out);
	} catch (const Usage &e) {
		out << "error: " << e.what() << "\n" << usage_text;
		return 2;
	} catch (const ParseError &e) {
		out << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		out << "error: " << e.what() << "\n";
		return 2;
	}
}

} // namespace jetcalc
