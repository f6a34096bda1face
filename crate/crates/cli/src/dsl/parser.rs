use super::ast::*;
use super::lexer::{lex, Tok};
use super::{Diagnostic, Span};

type PResult<T> = Result<T, Diagnostic>;

/// Parses a whole document. Stops at the first syntax error.
pub fn parse(text: &str) -> PResult<Document> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let mut items = Vec::new();
    while !p.at(&Tok::Eof) {
        items.push(p.item()?);
    }
    Ok(Document { items })
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn at(&self, t: &Tok) -> bool {
        self.peek() == t
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(x) if x == w)
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        Err(Diagnostic::syntax(
            self.span(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        ))
    }

    fn expect(&mut self, t: Tok) -> PResult<Span> {
        if self.at(&t) {
            Ok(self.bump().1)
        } else {
            self.unexpected(&t.describe())
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.at(t) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn keyword(&mut self, w: &str) -> PResult<Span> {
        if self.at_word(w) {
            Ok(self.bump().1)
        } else {
            self.unexpected(&format!("'{w}'"))
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        match self.peek().clone() {
            Tok::Word(name) if !name.contains('/') => {
                let span = self.bump().1;
                Ok(Ident { name, span })
            }
            _ => self.unexpected("an identifier"),
        }
    }

    fn int(&mut self) -> PResult<Int> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Word(w) => match w.parse::<i64>() {
                Ok(value) => {
                    self.bump();
                    Ok(Int { value, span })
                }
                Err(_) => self.unexpected("an integer"),
            },
            _ => self.unexpected("an integer"),
        }
    }

    fn rational(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Word(w)
                if w.split('/').count() <= 2
                    && w.split('/')
                        .all(|x| x.trim_start_matches('-').parse::<u64>().is_ok()) =>
            {
                self.bump();
                Ok(w)
            }
            _ => self.unexpected("a rational number"),
        }
    }

    /// `{ a b c }`
    fn id_set(&mut self) -> PResult<Vec<Ident>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        while !self.eat(&Tok::RBrace) {
            out.push(self.ident()?);
            self.eat(&Tok::Comma);
        }
        Ok(out)
    }

    fn item(&mut self) -> PResult<Item> {
        match self.peek() {
            Tok::Word(w) if w == "quiver" => self.quiver().map(Item::Quiver),
            Tok::Word(w) if w == "poset" => self.poset().map(Item::Poset),
            Tok::Word(w) if w == "coalgebra" => self.coalgebra().map(Item::Coalgebra),
            Tok::Word(w) if w == "hopf" => self.hopf().map(Item::Hopf),
            _ => self.unexpected("'quiver', 'poset', 'coalgebra' or 'hopf'"),
        }
    }

    fn quiver(&mut self) -> PResult<QuiverDecl> {
        self.keyword("quiver")?;
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        self.keyword("vertices")?;
        self.expect(Tok::Colon)?;
        let mut vertices = vec![self.ident()?];
        while !self.eat(&Tok::Semi) {
            vertices.push(self.ident()?);
        }
        let mut arrows = Vec::new();
        if self.at_word("arrows") {
            self.bump();
            self.expect(Tok::Colon)?;
            while !self.at(&Tok::RBrace) {
                let id = self.ident()?;
                self.expect(Tok::Colon)?;
                let source = self.ident()?;
                self.expect(Tok::Arrow)?;
                let target = self.ident()?;
                self.expect(Tok::Semi)?;
                arrows.push(ArrowDecl { id, source, target });
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(QuiverDecl {
            name,
            vertices,
            arrows,
        })
    }

    fn poset(&mut self) -> PResult<PosetDecl> {
        self.keyword("poset")?;
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        self.keyword("elements")?;
        self.expect(Tok::Colon)?;
        let mut elements = vec![self.ident()?];
        while !self.eat(&Tok::Semi) {
            elements.push(self.ident()?);
        }
        let mut relations = Vec::new();
        if self.at_word("covers") {
            self.bump();
            self.expect(Tok::Colon)?;
            while !self.at(&Tok::RBrace) {
                let a = self.ident()?;
                self.expect(Tok::Lt)?;
                let b = self.ident()?;
                self.expect(Tok::Semi)?;
                relations.push((a, b));
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(PosetDecl {
            name,
            elements,
            relations,
        })
    }

    fn coalgebra(&mut self) -> PResult<CoalgebraDecl> {
        self.keyword("coalgebra")?;
        let name = self.ident()?;
        self.expect(Tok::Eq)?;
        let span = self.span();
        let ctor = match self.peek() {
            Tok::Word(w) => w.clone(),
            _ => return self.unexpected("a coalgebra constructor"),
        };
        let expr = match ctor.as_str() {
            "paths" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let quiver = self.ident()?;
                let mut max_len = None;
                if self.eat(&Tok::Comma) {
                    self.keyword("maxlen")?;
                    self.expect(Tok::Eq)?;
                    max_len = Some(self.int()?);
                }
                self.expect(Tok::RParen)?;
                CoalgebraExpr::Paths { quiver, max_len }
            }
            "basis" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let quiver = self.ident()?;
                self.expect(Tok::RParen)?;
                self.expect(Tok::LBrace)?;
                let mut paths = Vec::new();
                while !self.eat(&Tok::RBrace) {
                    let mut p = vec![self.ident()?];
                    while matches!(self.peek(), Tok::Word(_)) {
                        p.push(self.ident()?);
                    }
                    paths.push(p);
                    if !self.eat(&Tok::Semi) && !self.eat(&Tok::Comma) && !self.at(&Tok::RBrace) {
                        return self.unexpected("';' or '}'");
                    }
                }
                CoalgebraExpr::Basis { quiver, paths }
            }
            "segments" | "full" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let poset = self.ident()?;
                let mut interior = None;
                if self.eat(&Tok::Comma) {
                    self.keyword("interior")?;
                    self.expect(Tok::Eq)?;
                    interior = Some(self.id_set()?);
                }
                self.expect(Tok::RParen)?;
                if ctor == "full" {
                    CoalgebraExpr::Full { poset, interior }
                } else {
                    self.expect(Tok::LBrace)?;
                    let mut segments = Vec::new();
                    while !self.eat(&Tok::RBrace) {
                        self.expect(Tok::LBracket)?;
                        let lo = self.ident()?;
                        self.expect(Tok::Comma)?;
                        let hi = self.ident()?;
                        self.expect(Tok::RBracket)?;
                        segments.push((lo, hi));
                        if !self.eat(&Tok::Semi) && !self.eat(&Tok::Comma) && !self.at(&Tok::RBrace)
                        {
                            return self.unexpected("';' or '}'");
                        }
                    }
                    CoalgebraExpr::Segments {
                        poset,
                        interior,
                        segments,
                    }
                }
            }
            "family" => {
                self.bump();
                self.family()?
            }
            "sum" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let mut parts = vec![self.ident()?];
                while self.eat(&Tok::Comma) {
                    parts.push(self.ident()?);
                }
                self.expect(Tok::RParen)?;
                CoalgebraExpr::Sum(parts)
            }
            _ => return self.unexpected("'paths', 'basis', 'segments', 'full', 'family' or 'sum'"),
        };
        self.eat(&Tok::Semi);
        Ok(CoalgebraDecl { name, expr, span })
    }

    fn family(&mut self) -> PResult<CoalgebraExpr> {
        self.expect(Tok::LParen)?;
        let kind_span = self.span();
        let kind = self.ident()?;
        let mut window = None;
        let mut r = None;
        let (mut n, mut s) = (None, None);
        while self.eat(&Tok::Comma) {
            let key = self.ident()?;
            self.expect(Tok::Eq)?;
            let dup = || Diagnostic::syntax(key.span, format!("'{}' given twice", key.name));
            match key.name.as_str() {
                "window" => {
                    self.expect(Tok::LBracket)?;
                    let a = self.int()?;
                    self.expect(Tok::Comma)?;
                    let b = self.int()?;
                    self.expect(Tok::RBracket)?;
                    if window.replace((a, b)).is_some() {
                        return Err(dup());
                    }
                }
                "r" => {
                    self.expect(Tok::LBrace)?;
                    let mut values = Vec::new();
                    while !self.eat(&Tok::RBrace) {
                        let k = self.int()?;
                        self.expect(Tok::Colon)?;
                        values.push((k, self.int()?));
                        if !self.eat(&Tok::Comma) && !self.at(&Tok::RBrace) {
                            return self.unexpected("',' or '}'");
                        }
                    }
                    if r.replace(RSpec::Values(values)).is_some() {
                        return Err(dup());
                    }
                }
                "n" => {
                    if n.replace(self.int()?).is_some() {
                        return Err(dup());
                    }
                }
                "s" => {
                    if s.replace(self.int()?).is_some() {
                        return Err(dup());
                    }
                }
                _ => {
                    return Err(Diagnostic::syntax(
                        key.span,
                        format!("unknown family parameter '{}'", key.name),
                    ))
                }
            }
        }
        let close = self.expect(Tok::RParen)?;
        let missing = |what: &str| Diagnostic::syntax(close, format!("family needs {what}"));
        match kind.name.as_str() {
            "Cn" => {
                if window.is_some() || r.is_some() {
                    return Err(Diagnostic::syntax(kind_span, "Cn takes only n and s"));
                }
                Ok(CoalgebraExpr::Cycle {
                    n: n.ok_or_else(|| missing("n"))?,
                    s: s.ok_or_else(|| missing("s"))?,
                })
            }
            "Ainf" | "A0inf" => {
                if n.is_some() {
                    return Err(Diagnostic::syntax(kind_span, "line families take no n"));
                }
                let r = match (r, s) {
                    (Some(r), None) => r,
                    (None, Some(s)) => RSpec::Offset(s),
                    _ => return Err(missing("exactly one of r={...} and s=")),
                };
                let kind = if kind.name == "Ainf" {
                    LineKindAst::AInf
                } else {
                    LineKindAst::A0Inf
                };
                Ok(CoalgebraExpr::Line {
                    kind,
                    window: window.ok_or_else(|| missing("window=[a,b]"))?,
                    r,
                })
            }
            other => Err(Diagnostic::syntax(
                kind_span,
                format!("unknown family '{other}', expected Ainf, A0inf or Cn"),
            )),
        }
    }

    fn hopf(&mut self) -> PResult<HopfDecl> {
        self.keyword("hopf")?;
        let name = self.ident()?;
        let open = self.expect(Tok::LBrace)?;
        let (mut s, mut q, mut group, mut alpha) = (None, None, None, None);
        while !self.eat(&Tok::RBrace) {
            let key = self.ident()?;
            self.expect(Tok::Colon)?;
            let fresh = match key.name.as_str() {
                "s" => s.replace(self.int()?).is_none(),
                "q" => q.replace(self.int()?).is_none(),
                "alpha" => alpha.replace(self.rational()?).is_none(),
                "group" => group.replace(self.group()?).is_none(),
                _ => {
                    return Err(Diagnostic::syntax(
                        key.span,
                        format!("unknown hopf field '{}'", key.name),
                    ))
                }
            };
            if !fresh {
                return Err(Diagnostic::syntax(
                    key.span,
                    format!("'{}' given twice", key.name),
                ));
            }
            self.expect(Tok::Semi)?;
        }
        let missing = |what: &str| Diagnostic::syntax(open, format!("hopf block needs {what}"));
        Ok(HopfDecl {
            name,
            s: s.ok_or_else(|| missing("s"))?,
            q: q.unwrap_or(Int {
                value: 1,
                span: open,
            }),
            group: group.ok_or_else(|| missing("group"))?,
            alpha: alpha.unwrap_or_else(|| "0".into()),
        })
    }

    fn group(&mut self) -> PResult<GroupSpec> {
        let kind = self.ident()?;
        self.expect(Tok::LParen)?;
        let spec = match kind.name.as_str() {
            "cyclic" => GroupSpec::Cyclic { n: self.int()? },
            "product" | "dihedral" => {
                let n = self.int()?;
                let key = if kind.name == "product" { "d" } else { "t" };
                let mut sign = Int {
                    value: 1,
                    span: kind.span,
                };
                if self.eat(&Tok::Comma) {
                    self.keyword(key)?;
                    self.expect(Tok::Eq)?;
                    sign = self.int()?;
                }
                if kind.name == "product" {
                    GroupSpec::Product { n, d: sign }
                } else {
                    GroupSpec::Dihedral { m: n, t: sign }
                }
            }
            "table" => {
                let path_span = self.span();
                let path = match self.bump().0 {
                    Tok::Str(p) => p,
                    _ => return Err(Diagnostic::syntax(path_span, "expected a quoted file name")),
                };
                self.expect(Tok::Comma)?;
                self.keyword("g")?;
                self.expect(Tok::Eq)?;
                let g = self.ident()?;
                self.expect(Tok::Comma)?;
                self.keyword("chi")?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBrace)?;
                let mut chi = Vec::new();
                while !self.eat(&Tok::RBrace) {
                    let a = self.ident()?;
                    self.expect(Tok::Colon)?;
                    chi.push((a, self.rational()?));
                    if !self.eat(&Tok::Comma) && !self.at(&Tok::RBrace) {
                        return self.unexpected("',' or '}'");
                    }
                }
                GroupSpec::Table {
                    path,
                    path_span,
                    g,
                    chi,
                }
            }
            other => {
                return Err(Diagnostic::syntax(
                    kind.span,
                    format!("unknown group '{other}', expected cyclic, product, dihedral or table"),
                ))
            }
        };
        self.expect(Tok::RParen)?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arrow_quiver() {
        let doc = parse("quiver Q { vertices: u v; arrows: a: u -> v; }").unwrap();
        let Item::Quiver(q) = &doc.items[0] else {
            panic!()
        };
        assert_eq!(q.vertices.len(), 2);
        assert_eq!(q.arrows[0].target.name, "v");
    }

    #[test]
    fn cycle_family() {
        let doc = parse("coalgebra C = family(Cn, n=2, s=1)").unwrap();
        let Item::Coalgebra(c) = &doc.items[0] else {
            panic!()
        };
        assert!(
            matches!(c.expr, CoalgebraExpr::Cycle { ref n, ref s } if n.value == 2 && s.value == 1)
        );
    }

    #[test]
    fn line_family_with_explicit_r() {
        let doc = parse("coalgebra L = family(A0inf, window=[0,2], r={0:1, 1:3, 2:3});").unwrap();
        let Item::Coalgebra(c) = &doc.items[0] else {
            panic!()
        };
        let CoalgebraExpr::Line {
            r: RSpec::Values(v),
            ..
        } = &c.expr
        else {
            panic!()
        };
        assert_eq!(
            v.iter().map(|(_, r)| r.value).collect::<Vec<_>>(),
            [1, 3, 3]
        );
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("quiver Q {\n  vertices: u v\n  arrows: a: u -> v;\n}").unwrap_err();
        assert_eq!((err.span.line, err.span.col), (3, 9));
        let err = parse("coalgebra C = family(Cn, n=2)").unwrap_err();
        assert!(err.message.contains("needs s"));
        let err = parse("hopf H { s: 1; group: klein(4); }").unwrap_err();
        assert_eq!(err.span.col, 23);
    }

    #[test]
    fn hopf_block() {
        let doc = parse("hopf H { s: 2; q: 2; group: product(3, d=-1); alpha: 1/2; }").unwrap();
        let Item::Hopf(h) = &doc.items[0] else {
            panic!()
        };
        assert_eq!((h.s.value, h.q.value, h.alpha.as_str()), (2, 2, "1/2"));
        assert!(matches!(h.group, GroupSpec::Product { ref d, .. } if d.value == -1));
    }
}
