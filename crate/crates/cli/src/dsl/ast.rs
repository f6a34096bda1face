use super::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

impl Ident {
    pub fn new(name: impl Into<String>) -> Self {
        Ident {
            name: name.into(),
            span: Span::default(),
        }
    }
}

/// An integer literal with its position, for range diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int {
    pub value: i64,
    pub span: Span,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Quiver(QuiverDecl),
    Poset(PosetDecl),
    Coalgebra(CoalgebraDecl),
    Hopf(HopfDecl),
}

impl Item {
    pub fn name(&self) -> &Ident {
        match self {
            Item::Quiver(d) => &d.name,
            Item::Poset(d) => &d.name,
            Item::Coalgebra(d) => &d.name,
            Item::Hopf(d) => &d.name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverDecl {
    pub name: Ident,
    pub vertices: Vec<Ident>,
    pub arrows: Vec<ArrowDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowDecl {
    pub id: Ident,
    pub source: Ident,
    pub target: Ident,
}

/// `relations` are strict `a < b` pairs; covers are the usual input but any
/// generating set of the order is accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetDecl {
    pub name: Ident,
    pub elements: Vec<Ident>,
    pub relations: Vec<(Ident, Ident)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraDecl {
    pub name: Ident,
    pub expr: CoalgebraExpr,
    /// Position of the constructor keyword.
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKindAst {
    AInf,
    A0Inf,
}

/// How a line family gives `r`: explicit values on the window, or a constant
/// offset `r(n) = n + s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RSpec {
    Values(Vec<(Int, Int)>),
    Offset(Int),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoalgebraExpr {
    Paths {
        quiver: Ident,
        max_len: Option<Int>,
    },
    Basis {
        quiver: Ident,
        paths: Vec<Vec<Ident>>,
    },
    Segments {
        poset: Ident,
        interior: Option<Vec<Ident>>,
        segments: Vec<(Ident, Ident)>,
    },
    Full {
        poset: Ident,
        interior: Option<Vec<Ident>>,
    },
    Line {
        kind: LineKindAst,
        window: (Int, Int),
        r: RSpec,
    },
    Cycle {
        n: Int,
        s: Int,
    },
    Sum(Vec<Ident>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfDecl {
    pub name: Ident,
    pub s: Int,
    /// `q = ζ_{s+1}^q`.
    pub q: Int,
    pub group: GroupSpec,
    /// Rational literal as written, `p` or `p/q`.
    pub alpha: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Cₙ = ⟨c⟩`, `g = c`, `χ(c) = q`.
    Cyclic { n: Int },
    /// `Cₙ × C₂ = ⟨c⟩ × ⟨d⟩`, `g = c`, `χ(c) = q`, `χ(d) = d`.
    Product { n: Int, d: Int },
    /// Dihedral of order `2m`, `g = r^{m/2}`, `χ(r) = −1`, `χ(t) = t`.
    Dihedral { m: Int, t: Int },
    /// A CSV multiplication table, the central element and the character
    /// values as turns `k/m` (meaning `e^{2πik/m}`).
    Table {
        path: String,
        path_span: Span,
        g: Ident,
        chi: Vec<(Ident, String)>,
    },
}
