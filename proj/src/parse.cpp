#include "jetcalc/parse.hpp"

#include <cctype>
#include <sstream>

namespace jetcalc {

namespace {

struct Token {
	enum Kind { Number, Name, Punct, End } kind;
	std::string text;
	int line, col;
};

class Lexer {
  public:
	Lexer(const std::string &text, int line0, int col0) : text_(text), line_(line0), col_(col0) {}

	std::vector<Token> run()
	{
		std::vector<Token> out;
		while (pos_ < text_.size()) {
			char c = text_[pos_];
			if (c == '#')
				break;
			if (c == '\n') {
				advance();
				continue;
			}
			if (std::isspace(uint8_t(c))) {
				advance();
				continue;
			}
			if (std::isdigit(uint8_t(c))) {
				Token t{Token::Number, "", line_, col_};
				while (pos_ < text_.size() && std::isdigit(uint8_t(text_[pos_]))) {
					t.text += text_[pos_];
					advance();
				}
				out.push_back(t);
				continue;
			}
			if (std::isalpha(uint8_t(c)) || c == '_') {
				Token t{Token::Name, "", line_, col_};
				while (pos_ < text_.size() &&
				       (std::isalnum(uint8_t(text_[pos_])) || text_[pos_] == '_')) {
					t.text += text_[pos_];
					advance();
				}
				out.push_back(t);
				continue;
			}
			if (std::string("+-*^/@()").find(c) != std::string::npos) {
				out.push_back({Token::Punct, std::string(1, c), line_, col_});
				advance();
				continue;
			}
			throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
		}
		out.push_back({Token::End, "", line_, col_});
		return out;
	}

  private:
	const std::string &text_;
	size_t pos_ = 0;
	int line_, col_;

	void advance()
	{
		if (text_[pos_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++pos_;
	}
};

class ExprParser {
  public:
	ExprParser(std::vector<Token> tokens, const RingPresentation &ring,
	           const ModulePresentation &mod)
	    : toks_(std::move(tokens)), ring_(ring), mod_(mod)
	{
	}

	TensorElement run()
	{
		TensorElement v = expr();
		expect_end();
		return v;
	}

  private:
	std::vector<Token> toks_;
	size_t pos_ = 0;
	const RingPresentation &ring_;
	const ModulePresentation &mod_;

	const Token &peek() const { return toks_[pos_]; }
	Token take() { return toks_[pos_++]; }
	bool at_punct(const char *p) const
	{
		return peek().kind == Token::Punct && peek().text == p;
	}
	[[noreturn]] void fail(const std::string &msg, const Token &t)
	{
		throw ParseError(msg, t.line, t.col);
	}
	void expect_end()
	{
		if (peek().kind != Token::End)
			fail("unexpected trailing input", peek());
	}

	static TensorElement coerce_zero(const TensorElement &z, uint32_t length)
	{
		return TensorElement::zero(Space::Tensor, length);
	}

	TensorElement combine_add(TensorElement a, TensorElement b, bool subtract, const Token &at)
	{
		if (a.length != b.length) {
			if (a.is_identically_zero())
				a = coerce_zero(a, b.length);
			else if (b.is_identically_zero())
				b = coerce_zero(b, a.length);
			else
				fail("tensor length mismatch: " + std::to_string(a.length) + " vs " +
				         std::to_string(b.length),
				     at);
		}
		return subtract ? a - b : a + b;
	}

	TensorElement expr()
	{
		bool neg = false;
		if (at_punct("-")) {
			take();
			neg = true;
		}
		TensorElement v = tens();
		if (neg)
			v = -v;
		while (at_punct("+") || at_punct("-")) {
			Token op = take();
			v = combine_add(std::move(v), tens(), op.text == "-", op);
		}
		return v;
	}

	TensorElement tens()
	{
		TensorElement v = term();
		while (at_punct("@")) {
			Token op = take();
			TensorElement w = term();
			if (v.length < 1 || w.length < 1)
				fail("'@' joins generator factors", op);
			TensorElement r = TensorElement::zero(Space::Tensor, v.length + w.length);
			for (auto &[wa, pa] : v.terms)
				for (auto &[wb, pb] : w.terms) {
					Word u = wa;
					u.insert(u.end(), wb.begin(), wb.end());
					r.add_term(u, pa * pb);
				}
			v = std::move(r);
		}
		return v;
	}

	TensorElement term()
	{
		TensorElement v = factor();
		while (at_punct("*")) {
			Token op = take();
			TensorElement w = factor();
			if (v.length == 0 && w.length == 0) {
				Polynomial p = as_polynomial(v) * as_polynomial(w);
				v = TensorElement::scalar(Space::Tensor, p);
			} else if (w.length == 0) {
				v = v * as_polynomial(w);
			} else if (v.length == 0) {
				v = w * as_polynomial(v);
			} else {
				fail("use '@' between generator factors", op);
			}
		}
		return v;
	}

	TensorElement factor()
	{
		TensorElement v = primary();
		if (at_punct("^")) {
			Token op = take();
			if (v.length != 0)
				fail("'^' applies to ring elements", op);
			if (peek().kind != Token::Number)
				fail("'^' needs an integer exponent", peek());
			uint32_t e = uint32_t(std::stoul(take().text));
			return TensorElement::scalar(Space::Tensor,
			                             as_polynomial(v).pow(e, ring_.nvars()));
		}
		return v;
	}

	TensorElement primary()
	{
		Token t = take();
		if (t.kind == Token::Number) {
			Integer num(t.text);
			if (at_punct("/")) {
				take();
				if (peek().kind != Token::Number)
					fail("rational needs an integer denominator", peek());
				Integer den(take().text);
				if (den == 0)
					fail("zero denominator", t);
				return TensorElement::scalar(
				    Space::Tensor, Polynomial::constant(Rational(num, den), ring_.nvars()));
			}
			return TensorElement::scalar(Space::Tensor,
			                             Polynomial::constant(Rational(num), ring_.nvars()));
		}
		if (t.kind == Token::Name) {
			if (auto v = ring_.find_var(t.text))
				return TensorElement::scalar(Space::Tensor,
				                             Polynomial::variable(*v, ring_.nvars()));
			if (auto g = mod_.find_gen(t.text))
				return TensorElement::word(Space::Tensor, Word{uint32_t(*g)},
				                           Polynomial::constant(1, ring_.nvars()));
			fail("unknown identifier '" + t.text + "'", t);
		}
		if (t.kind == Token::Punct && t.text == "(") {
			TensorElement v = expr();
			if (!at_punct(")"))
				fail("expected ')'", peek());
			take();
			return v;
		}
		fail("expected a number, name or '('", t);
	}
};

} // namespace

Polynomial as_polynomial(const TensorElement &t)
{
	if (t.is_identically_zero())
		return Polynomial();
	if (t.length != 0)
		throw std::invalid_argument("expected a ring element");
	return t.terms.begin()->second;
}

ModuleElement as_module_element(const TensorElement &t, size_t ngens)
{
	if (t.is_identically_zero())
		return ModuleElement::zero(ngens);
	if (t.length != 1)
		throw std::invalid_argument("expected a module element");
	return module_of(t, ngens);
}

TensorElement parse_expression(const std::string &text, const RingPresentation &ring,
                               const ModulePresentation &mod)
{
	return ExprParser(Lexer(text, 1, 1).run(), ring, mod).run();
}

namespace {

struct Line {
	int number;
	std::string text;
};

std::vector<Line> logical_lines(const std::string &text)
{
	std::vector<Line> out;
	std::istringstream in(text);
	std::string raw;
	int n = 0;
	while (std::getline(in, raw)) {
		++n;
		if (auto hash = raw.find('#'); hash != std::string::npos)
			raw = raw.substr(0, hash);
		size_t a = raw.find_first_not_of(" \t\r");
		if (a == std::string::npos)
			continue;
		size_t b = raw.find_last_not_of(" \t\r");
		out.push_back({n, raw.substr(a, b - a + 1)});
	}
	return out;
}

std::vector<std::string> split_list(const std::string &s)
{
	std::vector<std::string> out;
	std::string cur;
	int depth = 0;
	for (char c : s) {
		if (c == '(')
			++depth;
		if (c == ')')
			--depth;
		if (c == ',' && depth == 0) {
			out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty())
		out.push_back(cur);
	return out;
}

int parse_int(const std::string &s, int line)
{
	try {
		size_t used = 0;
		int v = std::stoi(s, &used);
		while (used < s.size() && std::isspace(uint8_t(s[used])))
			++used;
		if (used != s.size())
			throw std::invalid_argument("");
		return v;
	} catch (...) {
		throw ParseError("expected an integer, got '" + s + "'", line, 1);
	}
}

bool valid_name(const std::string &s)
{
	if (s.empty() || !(std::isalpha(uint8_t(s[0])) || s[0] == '_'))
		return false;
	for (char c : s)
		if (!(std::isalnum(uint8_t(c)) || c == '_'))
			return false;
	return true;
}

// "name:weight, name:weight" lists
template <typename Add>
void parse_decls(const std::string &body, int line, Add &&add)
{
	for (auto &item : split_list(body)) {
		auto colon = item.find(':');
		if (colon == std::string::npos)
			throw ParseError("expected name:weight in '" + item + "'", line, 1);
		std::string name = item.substr(0, colon);
		size_t a = name.find_first_not_of(" \t");
		size_t b = name.find_last_not_of(" \t");
		if (a == std::string::npos)
			throw ParseError("empty name", line, 1);
		name = name.substr(a, b - a + 1);
		if (!valid_name(name))
			throw ParseError("invalid name '" + name + "'", line, 1);
		add(name, parse_int(item.substr(colon + 1), line));
	}
}

} // namespace

Scenario parse_scenario(const std::string &text)
{
	Scenario s;
	enum Section { None, Ring, Module, DerivationS, ConnectionS, Options };
	Section cur = None;
	std::set<std::string> seen;
	bool have_vars = false, have_gens = false;
	std::vector<std::pair<int, std::string>> deriv_lines, conn_lines;
	std::optional<int> deriv_degree, conn_degree;

	auto section_of = [&](const std::string &t) -> std::optional<Section> {
		if (t == "[ring]")
			return Ring;
		if (t == "[module]")
			return Module;
		if (t == "[derivation]")
			return DerivationS;
		if (t == "[connection]")
			return ConnectionS;
		if (t == "[options]")
			return Options;
		return std::nullopt;
	};
	auto key_body = [](const std::string &t) -> std::optional<std::pair<std::string, std::string>> {
		auto colon = t.find(':');
		if (colon == std::string::npos)
			return std::nullopt;
		std::string key = t.substr(0, colon);
		if (!valid_name(key))
			return std::nullopt;
		return std::pair{key, t.substr(colon + 1)};
	};

	for (auto &line : logical_lines(text)) {
		const std::string &t = line.text;
		if (t.front() == '[') {
			auto sec = section_of(t);
			if (!sec)
				throw ParseError("unknown section '" + t + "'", line.number, 1);
			if (!seen.insert(t).second)
				throw ParseError("duplicate section " + t, line.number, 1);
			cur = *sec;
			continue;
		}
		switch (cur) {
		case None:
			throw ParseError("content before the first section", line.number, 1);
		case Ring: {
			auto kb = key_body(t);
			if (kb && kb->first == "vars") {
				parse_decls(kb->second, line.number, [&](const std::string &n, int w) {
					if (s.ring.find_var(n))
						throw ParseError("duplicate variable '" + n + "'", line.number, 1);
					s.ring.vars.push_back({n, w});
				});
				have_vars = true;
			} else if (kb && kb->first == "ideal") {
				if (!have_vars)
					throw ParseError("ideal before vars", line.number, 1);
				for (auto &e : split_list(kb->second))
					s.ring.ideal.push_back(
					    as_polynomial(parse_expression(e, s.ring, ModulePresentation{})));
			} else {
				throw ParseError("expected vars: or ideal:", line.number, 1);
			}
			break;
		}
		case Module: {
			auto kb = key_body(t);
			if (kb && kb->first == "gens") {
				if (!have_vars)
					throw ParseError("[module] before [ring] vars", line.number, 1);
				parse_decls(kb->second, line.number, [&](const std::string &n, int w) {
					if (s.module.find_gen(n) || s.ring.find_var(n))
						throw ParseError("duplicate name '" + n + "'", line.number, 1);
					s.module.gens.push_back({n, w});
				});
				have_gens = true;
			} else if (kb && kb->first == "rels") {
				if (!have_gens)
					throw ParseError("rels before gens", line.number, 1);
				for (auto &e : split_list(kb->second))
					s.module.relations.push_back(
					    as_module_element(parse_expression(e, s.ring, s.module), s.module.ngens())
					        .coeffs);
			} else {
				throw ParseError("expected gens: or rels:", line.number, 1);
			}
			break;
		}
		case DerivationS:
		case ConnectionS: {
			bool is_deriv = (cur == DerivationS);
			auto kb = key_body(t);
			if (kb && kb->first == "degree") {
				(is_deriv ? deriv_degree : conn_degree) = parse_int(kb->second, line.number);
				break;
			}
			(is_deriv ? deriv_lines : conn_lines).push_back({line.number, t});
			break;
		}
		case Options: {
			auto kb = key_body(t);
			if (!kb)
				throw ParseError("expected key: value", line.number, 1);
			if (kb->first == "order") {
				int v = parse_int(kb->second, line.number);
				if (v < 0)
					throw ParseError("order must be non-negative", line.number, 1);
				s.options.order = uint32_t(v);
			} else if (kb->first == "degree") {
				s.options.degree = parse_int(kb->second, line.number);
			} else if (kb->first == "seed") {
				s.options.seed = uint64_t(std::stoull(kb->second));
			} else {
				throw ParseError("unknown option '" + kb->first + "'", line.number, 1);
			}
			break;
		}
		}
	}

	if (!seen.count("[ring]"))
		throw ParseError("missing [ring]", 1, 1);
	if (!have_vars)
		throw ParseError("missing vars: in [ring]", 1, 1);
	if (!seen.count("[module]") || !have_gens)
		throw ParseError("missing [module]", 1, 1);
	if (!seen.count("[derivation]"))
		throw ParseError("missing [derivation]", 1, 1);

	// assignment lines, "D(name) = expr" / "G(name) = expr"
	auto parse_assign = [&](const std::pair<int, std::string> &ln, char head) {
		const std::string &t = ln.second;
		if (t.size() < 4 || t[0] != head || t[1] != '(')
			throw ParseError(std::string("expected ") + head + "(name) = expression", ln.first, 1);
		auto close = t.find(')');
		auto eq = t.find('=', close == std::string::npos ? 0 : close);
		if (close == std::string::npos || eq == std::string::npos)
			throw ParseError(std::string("expected ") + head + "(name) = expression", ln.first, 1);
		std::string name = t.substr(2, close - 2);
		size_t a = name.find_first_not_of(" \t");
		size_t b = name.find_last_not_of(" \t");
		name = (a == std::string::npos) ? "" : name.substr(a, b - a + 1);
		return std::pair{name, t.substr(eq + 1)};
	};

	s.derivation.degree = deriv_degree.value_or(0);
	s.derivation.values.assign(s.ring.nvars(), ModuleElement::zero(s.module.ngens()));
	std::set<std::string> assigned;
	for (auto &ln : deriv_lines) {
		auto [name, body] = parse_assign(ln, 'D');
		auto v = s.ring.find_var(name);
		if (!v)
			throw ParseError("unknown variable '" + name + "'", ln.first, 1);
		if (!assigned.insert(name).second)
			throw ParseError("duplicate D(" + name + ")", ln.first, 1);
		s.derivation.values[*v] =
		    as_module_element(parse_expression(body, s.ring, s.module), s.module.ngens());
	}
	for (auto &v : s.ring.vars)
		if (!assigned.count(v.name))
			throw ParseError("missing D(" + v.name + ")", 1, 1);

	if (seen.count("[connection]")) {
		Connection c;
		c.degree = conn_degree.value_or(0);
		c.values.assign(s.module.ngens(), TensorElement::zero(Space::Tensor, 2));
		std::set<std::string> cassigned;
		for (auto &ln : conn_lines) {
			auto [name, body] = parse_assign(ln, 'G');
			auto g = s.module.find_gen(name);
			if (!g)
				throw ParseError("unknown generator '" + name + "'", ln.first, 1);
			if (!cassigned.insert(name).second)
				throw ParseError("duplicate G(" + name + ")", ln.first, 1);
			TensorElement t = parse_expression(body, s.ring, s.module);
			if (t.is_identically_zero())
				t = TensorElement::zero(Space::Tensor, 2);
			if (t.length != 2)
				throw ParseError("connection value must be a length-2 tensor", ln.first, 1);
			c.values[*g] = std::move(t);
		}
		for (auto &g : s.module.gens)
			if (!cassigned.count(g.name))
				throw ParseError("missing G(" + g.name + ")", 1, 1);
		s.connection = std::move(c);
	} else if (!conn_lines.empty()) {
		throw ParseError("connection lines outside [connection]", conn_lines[0].first, 1);
	}
	return s;
}

} // namespace jetcalc
