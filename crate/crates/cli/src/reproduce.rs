//! The twelve acceptance criteria, runnable one by one or in groups.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use locdom::colour::{
    build_colour_graph, check_forced_bounds, colour_edge_counts, swap_witness, two_edge_subgraph,
    verify_structure, EdgeSelection,
};
use locdom::forced::{classify_by_characterization, classify_oracle};
use locdom::generators::reduction::three_literal_clauses;
use locdom::generators::{
    broom, connected_graphs, min_void_extremal, path, random_connected, verify_reduction,
    CnfInstance, Literal,
};
use locdom::paths::{brute_count, brute_count_ld_star, c_closed_form, CountTable, RecurrenceTerm};
use locdom::solver::{enumerate_minimum_ld_codes, gamma_ld, gamma_ld_star_exact};
use locdom::subsets::k_subsets;
use locdom::{is_ld_code, Graph, MinimumCodeCensus, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Broom parameters `(m, t)` for `G_{5m+4, t}`.
pub const BROOMS: [(usize, usize); 4] = [(1, 1), (1, 2), (1, 3), (2, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Paths,
    Forced,
    Colour,
    Bounds,
    Void,
    Reduction,
}

impl Group {
    pub const ALL: [Group; 6] = [
        Group::Paths,
        Group::Forced,
        Group::Colour,
        Group::Bounds,
        Group::Void,
        Group::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::Paths => "paths",
            Group::Forced => "forced",
            Group::Colour => "colour",
            Group::Bounds => "bounds",
            Group::Void => "void",
            Group::Reduction => "reduction",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Group::ALL.iter().map(|g| g.name()).collect();
                format!("unknown group `{s}`, expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Criterion {
    pub id: u8,
    pub group: Group,
    pub title: &'static str,
    /// Wall-clock budget.
    pub budget: Duration,
}

const fn criterion(id: u8, group: Group, title: &'static str, secs: u64) -> Criterion {
    Criterion {
        id,
        group,
        title,
        budget: Duration::from_secs(secs),
    }
}

pub const CRITERIA: [Criterion; 12] = [
    criterion(1, Group::Paths, "path location-domination number", 10),
    criterion(2, Group::Paths, "path LD* number", 10),
    criterion(
        3,
        Group::Paths,
        "minimum code counts of paths three ways",
        120,
    ),
    criterion(4, Group::Paths, "LD* count table against brute force", 60),
    criterion(
        5,
        Group::Forced,
        "forced-vertex characterization against the census",
        600,
    ),
    criterion(6, Group::Colour, "colour graph structure", 600),
    criterion(
        7,
        Group::Colour,
        "two-edge subgraphs are bipartite cacti",
        60,
    ),
    criterion(8, Group::Bounds, "forced-vertex cardinality bounds", 300),
    criterion(9, Group::Forced, "broom numbers and forced sets", 300),
    criterion(10, Group::Void, "min-void extremal graphs", 60),
    criterion(11, Group::Reduction, "3-SAT reduction equivalence", 900),
    criterion(12, Group::Colour, "swap witnesses", 300),
];

pub fn criterion_by_id(id: u8) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.id == id)
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub criterion: Criterion,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.criterion.budget
    }

    /// One line: `PASS criterion 3 ...`.
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} [{}] {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion.id,
            self.criterion.group,
            self.criterion.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// A connected graph with its full minimum-code census.
pub struct Sample {
    pub graph: Graph,
    pub census: MinimumCodeCensus,
}

/// Settings shared by all criteria, plus the lazily built graph corpus.
pub struct Suite {
    seed: u64,
    terms: Vec<RecurrenceTerm>,
    corpus: OnceLock<Vec<Sample>>,
}

/// Outcome of a criterion body: `Err` carries the first counterexample.
type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: locdom::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

impl Suite {
    pub fn new(seed: u64) -> Self {
        Suite {
            seed,
            terms: locdom::paths::STANDARD_TERMS.to_vec(),
            corpus: OnceLock::new(),
        }
    }

    /// Replace the path-count recurrence, e.g. with a corrupted one.
    pub fn with_recurrence(mut self, terms: Vec<RecurrenceTerm>) -> Self {
        self.terms = terms;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Every connected graph on at most 8 vertices, one per isomorphism class.
    pub fn corpus(&self) -> &[Sample] {
        self.corpus.get_or_init(|| {
            (1..=8)
                .flat_map(|n| connected_graphs(n).expect("catalogue order in range"))
                .map(|graph| {
                    let census = enumerate_minimum_ld_codes(&graph).expect("order <= 8");
                    Sample { graph, census }
                })
                .collect()
        })
    }

    /// The seeded random connected graphs with `9 <= n <= 12`.
    pub fn random_graphs(&self) -> Vec<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..200)
            .map(|_| {
                let n = rng.gen_range(9..=12);
                let p = rng.gen_range(0.05..0.5);
                random_connected(n, p, rng.gen()).expect("valid parameters")
            })
            .collect()
    }

    pub fn run(&self, c: &Criterion) -> Outcome {
        let start = Instant::now();
        let result = match c.id {
            1 => self.path_gamma(),
            2 => self.path_gamma_star(),
            3 => self.path_counts(),
            4 => self.a_table(),
            5 => self.characterization(),
            6 => self.colour_structure(),
            7 => self.cactus(),
            8 => self.bounds(),
            9 => self.brooms(),
            10 => self.void_extremal(),
            11 => self.reduction(),
            12 => self.swaps(),
            _ => Err(format!("no criterion {}", c.id)),
        };
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Outcome {
            criterion: *c,
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }

    pub fn run_groups(&self, groups: &[Group]) -> Vec<Outcome> {
        CRITERIA
            .iter()
            .filter(|c| groups.is_empty() || groups.contains(&c.group))
            .map(|c| self.run(c))
            .collect()
    }

    fn path_gamma(&self) -> Check {
        for n in 1..=15 {
            let gamma = lib(gamma_ld(&lib(path(n))?))?;
            ensure(gamma == (2 * n).div_ceil(5), || {
                format!("gamma(P_{n}) = {gamma}")
            })?;
        }
        Ok("gamma(P_n) = ceil(2n/5) for n = 1..15".into())
    }

    fn path_gamma_star(&self) -> Check {
        for n in 2..=15 {
            let gamma = lib(gamma_ld_star_exact(n))?;
            ensure(gamma == (2 * (n - 1)).div_ceil(5), || {
                format!("gamma*(P_{n}) = {gamma}")
            })?;
        }
        Ok("gamma*(P_n) = ceil(2(n-1)/5) for n = 2..15".into())
    }

    fn path_counts(&self) -> Check {
        let mut table = CountTable::with_terms(self.terms.clone());
        for (n, c) in [(10, 1), (7, 3), (9, 8)] {
            let values = [table.c_of_n(n), lib(c_closed_form(n))?];
            ensure(values == [c, c], || {
                format!("C({n}): recurrence/closed = {values:?}, expected {c}")
            })?;
        }
        for n in 5..=22 {
            let values = [
                table.c_of_n(n),
                lib(c_closed_form(n))?,
                lib(brute_count(n))?,
            ];
            ensure(values.iter().all(|&v| v == values[0]), || {
                format!("C({n}): recurrence/closed/brute = {values:?}")
            })?;
        }
        Ok(
            "recurrence, closed form and solver agree for n = 5..22; C(7)=3, C(9)=8, C(10)=1"
                .into(),
        )
    }

    fn a_table(&self) -> Check {
        let mut table = CountTable::with_terms(self.terms.clone());
        for (n, k, a) in [(1, 0, 1), (2, 1, 2), (3, 1, 2), (4, 2, 5), (5, 2, 4)] {
            let v = table.a_value(n, k);
            ensure(v == a, || format!("A({n},{k}) = {v}, expected {a}"))?;
        }
        let mut cells = 0;
        for n in 1..=18 {
            for k in 0..=n {
                let (v, b) = (table.a_value(n, k), lib(brute_count_ld_star(n, k))?);
                ensure(v == b, || format!("A({n},{k}): table {v}, subsets {b}"))?;
                cells += 1;
            }
        }
        Ok(format!(
            "{cells} cells for n <= 18 and the five base cases agree"
        ))
    }

    fn characterization(&self) -> Check {
        let mut graphs = 0;
        let corpus = self.corpus().iter().map(|s| &s.graph);
        let random = self.random_graphs();
        for g in corpus.chain(random.iter()) {
            let by_rule = lib(classify_by_characterization(g))?;
            let oracle = lib(classify_oracle(g))?.forced;
            ensure(by_rule == oracle, || {
                format!("{g:?}: characterization {{{by_rule}}} vs census {{{oracle}}}")
            })?;
            graphs += 1;
        }
        Ok(format!(
            "{graphs} graphs (all connected n <= 8, 200 random n = 9..12, seed {})",
            self.seed
        ))
    }

    fn colour_structure(&self) -> Check {
        let (mut codes, mut walks) = (0usize, 0usize);
        for s in self.corpus().iter().filter(|s| s.graph.order() >= 2) {
            let forced = s.census.intersection();
            for &code in &s.census.codes {
                let cg = lib(build_colour_graph(&s.graph, code))?;
                let report = verify_structure(&cg, &s.graph, code);
                if let Some(f) = report.failures().next() {
                    return Err(format!(
                        "{:?} code {{{code}}}: property {} fails: {}",
                        s.graph,
                        f.property.name(),
                        f.counterexample.as_deref().unwrap_or("")
                    ));
                }
                walks += report.walks_checked;
                for (u, (total, inner)) in colour_edge_counts(&cg, code) {
                    ensure(total >= 1, || {
                        format!("{:?} code {{{code}}}: colour {u} unused", s.graph)
                    })?;
                    ensure(!forced.contains(u) || inner >= 2, || {
                        format!(
                            "{:?} code {{{code}}}: forced {u} has {inner} inner edges",
                            s.graph
                        )
                    })?;
                }
                codes += 1;
            }
        }
        Ok(format!(
            "{codes} minimum codes, all properties hold; {walks} trail prefixes checked"
        ))
    }

    fn cactus(&self) -> Check {
        let mut checked = 0usize;
        let mut check = |g: &Graph, code: VertexSet, colours: VertexSet, salt: u64| -> Check {
            let cg = lib(build_colour_graph(g, code))?;
            for sel in [
                EdgeSelection::Lexicographic,
                EdgeSelection::Seeded(self.seed ^ salt),
            ] {
                let h = lib(two_edge_subgraph(&cg, code, colours, sel))?;
                ensure(h.all_hold(), || {
                    format!(
                        "{g:?} code {{{code}}} colours {{{colours}}} {sel:?}: bipartite {} cactus {} bound {}",
                        h.bipartite, h.cactus_components, h.bound_holds
                    )
                })?;
                checked += 1;
            }
            Ok(String::new())
        };
        for (i, s) in self
            .corpus()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.graph.order() >= 2)
        {
            for &code in &s.census.codes {
                let cg = lib(build_colour_graph(&s.graph, code))?;
                let colours: VertexSet = colour_edge_counts(&cg, code)
                    .into_iter()
                    .filter(|&(_, (_, inner))| inner >= 2)
                    .map(|(u, _)| u)
                    .collect();
                check(&s.graph, code, colours, i as u64)?;
            }
        }
        for (m, t) in BROOMS.into_iter().chain([(2, 3)]) {
            let g = lib(broom(5 * m + 4, t))?;
            let census = lib(enumerate_minimum_ld_codes(&g))?;
            let forced = census.intersection();
            for &code in &census.codes {
                check(&g, code, forced, (m * 10 + t) as u64)?;
            }
        }
        let p10 = lib(path(10))?;
        let code: VertexSet = [2, 4, 7, 9].into_iter().collect();
        let h = lib(two_edge_subgraph(
            &lib(build_colour_graph(&p10, code))?,
            code,
            code,
            EdgeSelection::Lexicographic,
        ))?;
        let shape = (h.vertex_count(), h.edge_count(), h.components);
        ensure(shape == (7, 8, 1) && h.bound_tight(), || {
            format!("P_10: (|V|, |E|, cc) = {shape:?}")
        })?;
        Ok(format!("{checked} subgraphs hold; P_10 gives 7 = 6 + 1"))
    }

    fn bounds(&self) -> Check {
        let mut graphs: Vec<Graph> = self
            .corpus()
            .iter()
            .filter(|s| s.graph.order() >= 2)
            .map(|s| s.graph.clone())
            .collect();
        graphs.extend(self.random_graphs());
        let mut with_forced = 0;
        for g in &graphs {
            let r = lib(check_forced_bounds(g))?;
            ensure(r.holds(), || format!("{g:?}: {r:?}"))?;
            with_forced += usize::from(r.asserted());
        }
        for (m, t) in BROOMS {
            let r = lib(check_forced_bounds(&lib(broom(5 * m + 4, t))?))?;
            ensure(r.holds() && r.two_thirds_tight, || {
                format!("broom m={m} t={t}: {r:?}")
            })?;
        }
        let r = lib(check_forced_bounds(&lib(path(10))?))?;
        ensure(r.forced == 4 && r.two_fifths_tight, || {
            format!("P_10: {r:?}")
        })?;
        Ok(format!(
            "bounds hold on {with_forced} graphs with forced vertices; brooms tight; P_10 has k = 2n/5"
        ))
    }

    fn brooms(&self) -> Check {
        for (m, t) in BROOMS {
            let g = lib(broom(5 * m + 4, t))?;
            let gamma = lib(gamma_ld(&g))?;
            ensure(gamma == 2 * m + t + 1, || {
                format!("broom m={m} t={t}: gamma {gamma}")
            })?;
            let forced = lib(classify_oracle(&g))?.forced;
            let expected: VertexSet = (0..=m).flat_map(|l| [5 * l + 2, 5 * l + 4]).collect();
            ensure(forced == expected, || {
                format!("broom m={m} t={t}: forced {{{forced}}}")
            })?;
        }
        Ok("gamma = 2m+t+1 and forced = {5l+2, 5l+4} for all four brooms".into())
    }

    fn void_extremal(&self) -> Check {
        for h in [2, 3] {
            let g = lib(min_void_extremal(h))?;
            let gamma = lib(gamma_ld(&g))?;
            let void = lib(classify_oracle(&g))?.void.len();
            ensure(gamma == h && void == (1 << h) - 1, || {
                format!("h={h}: gamma {gamma}, {void} void vertices")
            })?;
        }
        Ok("h = 2, 3: gamma = h with 2^h - 1 void vertices".into())
    }

    fn reduction(&self) -> Check {
        let mut instances: Vec<CnfInstance> = Vec::new();
        let pool = three_literal_clauses(2);
        for a in 0..pool.len() {
            instances.push(lib(CnfInstance::new(2, vec![pool[a]]))?);
            for b in a + 1..pool.len() {
                instances.push(lib(CnfInstance::new(2, vec![pool[a], pool[b]]))?);
                for c in b + 1..pool.len() {
                    instances.push(lib(CnfInstance::new(2, vec![pool[a], pool[b], pool[c]]))?);
                }
            }
        }
        let exhaustive = instances.len();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0x5a7);
        for _ in 0..60 {
            let m = rng.gen_range(1..=3);
            let clauses = (0..m)
                .map(|_| {
                    [0; 3].map(|_| {
                        let var = rng.gen_range(1..=3);
                        if rng.gen() {
                            Literal::neg(var)
                        } else {
                            Literal::pos(var)
                        }
                    })
                })
                .collect();
            instances.push(lib(CnfInstance::new(3, clauses))?);
        }
        let (mut sat, mut unsat) = (0, 0);
        for f in &instances {
            let r = lib(verify_reduction(f))?;
            ensure(r.passed(), || format!("{f:?}: {r:?}"))?;
            if r.satisfiable {
                sat += 1;
            } else {
                unsat += 1;
            }
        }
        Ok(format!(
            "{exhaustive} two-variable and 60 sampled three-variable formulas ({sat} sat, {unsat} unsat)"
        ))
    }

    fn swaps(&self) -> Check {
        let (mut codes, mut witnesses) = (0usize, 0usize);
        for s in self.corpus().iter().filter(|s| s.graph.order() >= 2) {
            let g = &s.graph;
            for code in minimal_codes(g) {
                let cg = lib(build_colour_graph(g, code))?;
                let counts = colour_edge_counts(&cg, code);
                for v in code {
                    let w = lib(swap_witness(g, code, v))?;
                    if let Some(u) = w {
                        ensure(
                            !code.contains(u) && lib(is_ld_code(g, code.swap(v, u)))?,
                            || format!("{g:?} code {{{code}}}: witness {u} for {v} is invalid"),
                        )?;
                        witnesses += 1;
                    }
                    ensure(counts[&v].1 >= 2 || w.is_some(), || {
                        format!("{g:?} code {{{code}}}: no witness for {v}")
                    })?;
                }
                codes += 1;
            }
        }
        Ok(format!(
            "{codes} minimal codes, {witnesses} witnesses, all valid"
        ))
    }
}

/// Every inclusion-minimal LD-code of `g`.
pub fn minimal_codes(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let is_code = |s: VertexSet| !s.is_empty() && is_ld_code(g, s).unwrap_or(false);
    (1..=n)
        .flat_map(|k| k_subsets(n, k))
        .filter(|&s| {
            is_code(s)
                && s.iter()
                    .all(|u| !is_code(s.difference(VertexSet::singleton(u))))
        })
        .collect()
}
