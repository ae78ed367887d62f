//! The 3-SAT gadget graph that ties min-forced and min-void vertices to
//! unsatisfiability, plus an exhaustive cross-check of that equivalence.
//!
//! Vertex layout for `n` variables and `m` clauses:
//!
//! | labels                        | role                        |
//! |-------------------------------|-----------------------------|
//! | `4(i-1)+1 ..= 4i`             | `x_i`, `x̄_i`, `a_i`, `b_i` |
//! | `4n+3(j-1)+1 ..= 4n+3j`       | `α_j`, `β_j`, `γ_j`         |
//! | `4n+3m+1`, `4n+3m+2`          | `w`, `v`                    |

use alloc::format;
use alloc::vec::Vec;

use crate::forced::classify_census;
use crate::solver::enumerate_minimum_ld_codes;
use crate::{Error, Graph, Result, VertexSet};

/// A literal: variable index in `1..=vars`, possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// DIMACS integer form: `var` or `-var`.
    pub fn to_dimacs(self) -> i64 {
        if self.negated {
            -(self.var as i64)
        } else {
            self.var as i64
        }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        match x {
            0 => None,
            x if x > 0 => Some(Literal::pos(x as usize)),
            x => Some(Literal::neg(x.unsigned_abs() as usize)),
        }
    }

    /// Value under an assignment where bit `var - 1` set means true.
    pub fn eval(self, assignment: u64) -> bool {
        (assignment >> (self.var - 1) & 1 == 1) != self.negated
    }
}

/// A 3-CNF formula; literals inside a clause need not be distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfInstance {
    pub fn new(vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if vars == 0 {
            return Err(Error::MalformedCnf("need at least one variable".into()));
        }
        for (j, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.var == 0 || l.var > vars) {
                return Err(Error::MalformedCnf(format!(
                    "clause {} uses variable {} outside 1..={vars}",
                    j + 1,
                    l.var
                )));
            }
        }
        Ok(CnfInstance { vars, clauses })
    }

    /// Build from DIMACS-style integer triples.
    pub fn from_dimacs(vars: usize, clauses: &[[i64; 3]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                let mut out = [Literal::pos(1); 3];
                for (slot, &x) in out.iter_mut().zip(c) {
                    *slot = Literal::from_dimacs(x)
                        .ok_or_else(|| Error::MalformedCnf("literal 0 inside a clause".into()))?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        CnfInstance::new(vars, clauses)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// First satisfying assignment in increasing bit order, by trying all `2^vars`.
    pub fn brute_force_model(&self) -> Result<Option<u64>> {
        if self.vars > 24 {
            return Err(Error::InvalidParameter(format!(
                "brute-force SAT limited to 24 variables, got {}",
                self.vars
            )));
        }
        Ok((0u64..1 << self.vars).find(|&a| self.is_satisfied_by(a)))
    }
}

/// Every clause of three literals over `vars` variables, taken as a multiset
/// (so `(x1 ∨ x1 ∨ x̄2)` appears once), each sorted ascending.
pub fn three_literal_clauses(vars: usize) -> Vec<[Literal; 3]> {
    let lits: Vec<Literal> = (1..=vars)
        .flat_map(|v| [Literal::pos(v), Literal::neg(v)])
        .collect();
    let mut out = Vec::new();
    for a in 0..lits.len() {
        for b in a..lits.len() {
            for c in b..lits.len() {
                out.push([lits[a], lits[b], lits[c]]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// `x_i`
    Positive(usize),
    /// `x̄_i`
    Negative(usize),
    A(usize),
    B(usize),
    Alpha(usize),
    Beta(usize),
    Gamma(usize),
    W,
    V,
}

/// The reduction graph with a role for every vertex.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    vars: usize,
    clauses: usize,
}

impl ReductionGraph {
    pub fn label(&self, role: Role) -> usize {
        let (n, m) = (self.vars, self.clauses);
        match role {
            Role::Positive(i) => 4 * (i - 1) + 1,
            Role::Negative(i) => 4 * (i - 1) + 2,
            Role::A(i) => 4 * (i - 1) + 3,
            Role::B(i) => 4 * (i - 1) + 4,
            Role::Alpha(j) => 4 * n + 3 * (j - 1) + 1,
            Role::Beta(j) => 4 * n + 3 * (j - 1) + 2,
            Role::Gamma(j) => 4 * n + 3 * (j - 1) + 3,
            Role::W => 4 * n + 3 * m + 1,
            Role::V => 4 * n + 3 * m + 2,
        }
    }

    pub fn role(&self, v: usize) -> Role {
        let (n, m) = (self.vars, self.clauses);
        assert!(
            (1..=4 * n + 3 * m + 2).contains(&v),
            "vertex {v} out of range"
        );
        if v <= 4 * n {
            let i = (v - 1) / 4 + 1;
            return match (v - 1) % 4 {
                0 => Role::Positive(i),
                1 => Role::Negative(i),
                2 => Role::A(i),
                _ => Role::B(i),
            };
        }
        if v <= 4 * n + 3 * m {
            let j = (v - 4 * n - 1) / 3 + 1;
            return match (v - 4 * n - 1) % 3 {
                0 => Role::Alpha(j),
                1 => Role::Beta(j),
                _ => Role::Gamma(j),
            };
        }
        if v == 4 * n + 3 * m + 1 {
            Role::W
        } else {
            Role::V
        }
    }

    pub fn literal_vertex(&self, l: Literal) -> usize {
        if l.negated {
            self.label(Role::Negative(l.var))
        } else {
            self.label(Role::Positive(l.var))
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clause_count(&self) -> usize {
        self.clauses
    }
}

/// Variable gadgets are 4-cycles `x_i a_i x̄_i b_i`, clause gadgets are paths
/// `α_j β_j γ_j`; each `α_j` is joined to its literals and to `w`, and `w ~ v`.
/// A literal repeated inside a clause yields a single edge.
pub fn sat_reduction(f: &CnfInstance) -> ReductionGraph {
    let (n, m) = (f.vars(), f.clauses().len());
    let shell = ReductionGraph {
        graph: Graph::empty(0),
        vars: n,
        clauses: m,
    };
    let mut edges = Vec::with_capacity(4 * n + 6 * m + 1);
    for i in 1..=n {
        let (x, nx, a, b) = (
            shell.label(Role::Positive(i)),
            shell.label(Role::Negative(i)),
            shell.label(Role::A(i)),
            shell.label(Role::B(i)),
        );
        edges.extend([(x, a), (a, nx), (nx, b), (b, x)]);
    }
    let w = shell.label(Role::W);
    for (j, clause) in f.clauses().iter().enumerate() {
        let j = j + 1;
        let (alpha, beta, gamma) = (
            shell.label(Role::Alpha(j)),
            shell.label(Role::Beta(j)),
            shell.label(Role::Gamma(j)),
        );
        edges.extend([(alpha, beta), (beta, gamma), (w, alpha)]);
        edges.extend(clause.iter().map(|&l| (alpha, shell.literal_vertex(l))));
    }
    edges.push((w, shell.label(Role::V)));
    let graph = Graph::from_edge_set(4 * n + 3 * m + 2, edges).expect("gadget labels are in range");
    ReductionGraph { graph, ..shell }
}

/// Largest reduction graph [`verify_reduction`] will enumerate.
pub const VERIFY_LIMIT: usize = 24;

/// Outcome of cross-checking one formula against its reduction graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub satisfiable: bool,
    pub gamma: usize,
    /// `2n + m + 1`.
    pub expected_gamma: usize,
    pub minimum_codes: usize,
    /// No minimum code contains any `α_j`.
    pub no_alpha_in_codes: bool,
    /// Every minimum code holds exactly one of `x_i`, `x̄_i` for each `i`.
    pub one_literal_per_variable: bool,
    /// Every minimum code holds exactly one of `w`, `v`.
    pub one_of_w_v: bool,
    pub w_forced: bool,
    pub v_void: bool,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.gamma == self.expected_gamma
            && self.no_alpha_in_codes
            && self.one_literal_per_variable
            && self.one_of_w_v
            && self.w_forced == !self.satisfiable
            && self.v_void == !self.satisfiable
    }
}

/// Decide `F` by brute force, enumerate all minimum codes of its reduction
/// graph, and record each property the equivalence relies on.
pub fn verify_reduction(f: &CnfInstance) -> Result<ReductionReport> {
    let rg = sat_reduction(f);
    let order = rg.graph.order();
    if order > VERIFY_LIMIT {
        return Err(Error::TooLarge {
            order,
            limit: VERIFY_LIMIT,
        });
    }
    let satisfiable = f.brute_force_model()?.is_some();
    let census = enumerate_minimum_ld_codes(&rg.graph)?;
    let class = classify_census(order, &census);
    let (n, m) = (f.vars(), f.clauses().len());

    let alphas: VertexSet = (1..=m).map(|j| rg.label(Role::Alpha(j))).collect();
    let exactly_one = |code: VertexSet, a: usize, b: usize| code.contains(a) != code.contains(b);
    let (w, v) = (rg.label(Role::W), rg.label(Role::V));

    Ok(ReductionReport {
        satisfiable,
        gamma: census.gamma,
        expected_gamma: 2 * n + m + 1,
        minimum_codes: census.count(),
        no_alpha_in_codes: census
            .codes
            .iter()
            .all(|c| c.intersection(alphas).is_empty()),
        one_literal_per_variable: census.codes.iter().all(|&c| {
            (1..=n)
                .all(|i| exactly_one(c, rg.label(Role::Positive(i)), rg.label(Role::Negative(i))))
        }),
        one_of_w_v: census.codes.iter().all(|&c| exactly_one(c, w, v)),
        w_forced: class.forced.contains(w),
        v_void: class.void.contains(v),
    })
}
