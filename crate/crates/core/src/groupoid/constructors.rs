use super::{Groupoid, GroupoidError, Morphism};

/// A finite group as a Cayley table over named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupoidError> {
        let bad = |m: String| GroupoidError::InvalidGroupTable(m);
        let n = names.len();
        if n == 0 {
            return Err(bad("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(bad("table is not square over the elements".into()));
        }
        if table.iter().flatten().any(|&k| k >= n) {
            return Err(bad("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| bad(format!("{} has no inverse", names[g])))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupTable { names, table, identity, inverse })
    }

    /// Z/n with elements `e, g, g2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table).expect("cyclic table is a group")
    }

    /// S3 as permutations of {0,1,2}, generated by the 3-cycle `r` and the
    /// transposition `s`; `ab` means apply `b` first.
    pub fn symmetric3() -> Self {
        type Perm = [usize; 3];
        let compose = |a: &Perm, b: &Perm| -> Perm { [a[b[0]], a[b[1]], a[b[2]]] };
        let e: Perm = [0, 1, 2];
        let r: Perm = [1, 2, 0];
        let s: Perm = [1, 0, 2];
        let r2 = compose(&r, &r);
        let elems = [
            ("e", e),
            ("r", r),
            ("r2", r2),
            ("s", s),
            ("rs", compose(&r, &s)),
            ("r2s", compose(&r2, &s)),
        ];
        let pos = |p: &Perm| elems.iter().position(|(_, q)| q == p).expect("closed");
        let table = elems
            .iter()
            .map(|(_, a)| elems.iter().map(|(_, b)| pos(&compose(a, b))).collect())
            .collect();
        Self::new(elems.iter().map(|(n, _)| n.to_string()).collect(), table)
            .expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }
}

/// A left action of a group on a finite set of named points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetAction {
    points: Vec<String>,
    /// `act[g][p] = g·p`.
    act: Vec<Vec<usize>>,
}

impl SetAction {
    pub fn new(
        group: &GroupTable,
        points: Vec<String>,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupoidError> {
        let m = points.len();
        let act: Vec<Vec<usize>> =
            (0..group.order()).map(|g| (0..m).map(|p| act(g, p)).collect()).collect();
        let bad = |s: String| GroupoidError::InvalidAction(s);
        if act.iter().flatten().any(|&q| q >= m) {
            return Err(bad("point out of range".into()));
        }
        if (0..m).any(|p| act[group.identity()][p] != p) {
            return Err(bad("identity does not act trivially".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                for p in 0..m {
                    if act[group.mul(a, b)][p] != act[a][act[b][p]] {
                        return Err(bad(format!(
                            "({}{})·{} differs from {}·({}·{})",
                            group.names[a], group.names[b], points[p], group.names[a],
                            group.names[b], points[p]
                        )));
                    }
                }
            }
        }
        Ok(SetAction { points, act })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn act(&self, g: usize, p: usize) -> usize {
        self.act[g][p]
    }
}

/// The group as a groupoid with the single object `*`.
pub fn one_object(group: &GroupTable) -> Groupoid {
    let morphisms = group
        .names
        .iter()
        .map(|n| Morphism { id: n.clone(), src: 0, tgt: 0 })
        .collect();
    Groupoid::from_indexed(
        vec!["*".into()],
        morphisms,
        |a, b| Some(group.mul(a, b)),
        vec![group.identity()],
        (0..group.order()).map(|g| group.inverse(g)).collect(),
    )
}

/// Objects `0..n` with exactly one morphism `t<-s` between any two.
pub fn pair_groupoid(n: usize) -> Groupoid {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    // morphism index = t * n + s
    let morphisms = (0..n)
        .flat_map(|t| (0..n).map(move |s| (t, s)))
        .map(|(t, s)| Morphism { id: format!("{t}<-{s}"), src: s, tgt: t })
        .collect();
    Groupoid::from_indexed(
        objects,
        morphisms,
        |g, h| {
            let (gt, gs) = (g / n, g % n);
            let (ht, hs) = (h / n, h % n);
            (gs == ht).then_some(gt * n + hs)
        },
        (0..n).map(|x| x * n + x).collect(),
        (0..n * n).map(|g| (g % n) * n + g / n).collect(),
    )
}

/// The action groupoid: morphisms `g@p : p → g·p`, listed group-major.
pub fn action_groupoid(group: &GroupTable, action: &SetAction) -> Groupoid {
    let m = action.points.len();
    let morphisms = (0..group.order())
        .flat_map(|g| (0..m).map(move |p| (g, p)))
        .map(|(g, p)| Morphism {
            id: format!("{}@{}", group.names[g], action.points[p]),
            src: p,
            tgt: action.act(g, p),
        })
        .collect();
    let index = |g: usize, p: usize| g * m + p;
    Groupoid::from_indexed(
        action.points.clone(),
        morphisms,
        |a, b| {
            let (ga, pa) = (a / m, a % m);
            let (gb, pb) = (b / m, b % m);
            (action.act(gb, pb) == pa).then(|| index(group.mul(ga, gb), pb))
        },
        (0..m).map(|p| index(group.identity(), p)).collect(),
        (0..group.order() * m)
            .map(|a| {
                let (g, p) = (a / m, a % m);
                index(group.inverse(g), action.act(g, p))
            })
            .collect(),
    )
}

/// Side-by-side union; ids are prefixed with `l.` and `r.`.
pub fn disjoint_union(left: &Groupoid, right: &Groupoid) -> Groupoid {
    let (lo, lm) = (left.num_objects(), left.num_morphisms());
    let objects = left
        .objects()
        .iter()
        .map(|o| format!("l.{o}"))
        .chain(right.objects().iter().map(|o| format!("r.{o}")))
        .collect();
    let morphisms = left
        .morphisms()
        .iter()
        .map(|m| Morphism { id: format!("l.{}", m.id), src: m.src, tgt: m.tgt })
        .chain(right.morphisms().iter().map(|m| Morphism {
            id: format!("r.{}", m.id),
            src: m.src + lo,
            tgt: m.tgt + lo,
        }))
        .collect();
    Groupoid::from_indexed(
        objects,
        morphisms,
        |a, b| match (a < lm, b < lm) {
            (true, true) => left.compose(a, b),
            (false, false) => right.compose(a - lm, b - lm).map(|c| c + lm),
            _ => None,
        },
        (0..left.num_objects())
            .map(|x| left.identity(x))
            .chain((0..right.num_objects()).map(|x| right.identity(x) + lm))
            .collect(),
        (0..lm)
            .map(|g| left.inverse(g))
            .chain((0..right.num_morphisms()).map(|g| right.inverse(g) + lm))
            .collect(),
    )
}
