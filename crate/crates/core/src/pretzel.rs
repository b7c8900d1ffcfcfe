//! Three-strand pretzel knots: parameter validation, classification into the
//! two computed families, and the Wirtinger presentation of the standard
//! projection.

use std::fmt;

use crate::error::{Error, Result};

/// Signed twist counts of the three bands. The sign is the handedness of the
/// band's crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PretzelParams([i64; 3]);

impl PretzelParams {
    pub fn new(p1: i64, p2: i64, p3: i64) -> Result<Self> {
        let bands = [p1, p2, p3];
        if let Some(reason) = degeneracy(bands) {
            return Err(Error::DegenerateParams(bands, reason.to_string()));
        }
        Ok(Self(bands))
    }

    pub fn bands(&self) -> [i64; 3] {
        self.0
    }

    pub fn crossing_count(&self) -> usize {
        self.0.iter().map(|p| p.unsigned_abs() as usize).sum()
    }

    pub fn mirror(&self) -> Self {
        Self(self.0.map(|p| -p))
    }
}

impl fmt::Display for PretzelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p1, p2, p3] = self.0;
        write!(f, "K({p1},{p2},{p3})")
    }
}

fn degeneracy(bands: [i64; 3]) -> Option<&'static str> {
    if bands.contains(&0) {
        return Some("zero-twist band");
    }
    if bands.iter().filter(|p| *p % 2 == 0).count() > 1 {
        return Some("two or more even bands give a link, not a knot");
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// `K(-2a, 2b+1, 2c+1)`
    Thm1,
    /// `K(2a, -(2b+1), 2c+1)`
    Thm2,
    MirrorThm1,
    MirrorThm2,
    /// All-odd triples, alternating sign patterns and bands of a single
    /// crossing; homology is known from earlier computations.
    PriorWork,
    NotAKnot,
}

impl ClassTag {
    pub fn name(&self) -> &'static str {
        match self {
            ClassTag::Thm1 => "Thm1",
            ClassTag::Thm2 => "Thm2",
            ClassTag::MirrorThm1 => "MirrorThm1",
            ClassTag::MirrorThm2 => "MirrorThm2",
            ClassTag::PriorWork => "PriorWork",
            ClassTag::NotAKnot => "NotAKnot",
        }
    }

    pub fn is_family1(&self) -> bool {
        matches!(self, ClassTag::Thm1 | ClassTag::MirrorThm1)
    }

    pub fn is_family2(&self) -> bool {
        matches!(self, ClassTag::Thm2 | ClassTag::MirrorThm2)
    }

    pub fn is_computed(&self) -> bool {
        self.is_family1() || self.is_family2()
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family parameters `a, b, c >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Abc {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Abc {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        assert!(
            a >= 1 && b >= 1 && c >= 1,
            "family parameters must be positive"
        );
        Self { a, b, c }
    }

    /// `(-2a, 2b+1, 2c+1)`
    pub fn family1_triple(&self) -> [i64; 3] {
        [-2 * self.a, 2 * self.b + 1, 2 * self.c + 1]
    }

    /// `(2a, -(2b+1), 2c+1)`
    pub fn family2_triple(&self) -> [i64; 3] {
        [2 * self.a, -(2 * self.b + 1), 2 * self.c + 1]
    }
}

impl fmt::Display for Abc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a,b,c)=({},{},{})", self.a, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PretzelClass {
    pub tag: ClassTag,
    pub abc: Option<Abc>,
    pub mirrored: bool,
    /// Input bands reordered into canonical position (signs as given).
    pub canonical: [i64; 3],
    pub reason: Option<String>,
}

impl PretzelClass {
    pub fn family1(abc: Abc) -> Self {
        Self {
            tag: ClassTag::Thm1,
            abc: Some(abc),
            mirrored: false,
            canonical: abc.family1_triple(),
            reason: None,
        }
    }

    pub fn family2(abc: Abc) -> Self {
        Self {
            tag: ClassTag::Thm2,
            abc: Some(abc),
            mirrored: false,
            canonical: abc.family2_triple(),
            reason: None,
        }
    }

    /// The `(a, b, c)` of a family-1 knot (possibly mirrored).
    pub fn family1_abc(&self) -> Result<Abc> {
        match (self.tag.is_family1(), self.abc) {
            (true, Some(abc)) => Ok(abc),
            _ => Err(Error::UnsupportedTag {
                expected: "Thm1",
                got: self.tag,
            }),
        }
    }

    /// The `(a, b, c)` of an unmirrored family-1 knot.
    pub fn thm1_abc(&self) -> Result<Abc> {
        match (self.tag, self.abc) {
            (ClassTag::Thm1, Some(abc)) => Ok(abc),
            _ => Err(Error::UnsupportedTag {
                expected: "Thm1",
                got: self.tag,
            }),
        }
    }
}

/// Sorts the bands into canonical position: the even band (if any) first,
/// then the odd bands by value.
fn canonical_order(bands: [i64; 3]) -> [i64; 3] {
    let mut sorted = bands;
    sorted.sort_by_key(|p| (p % 2 != 0, *p));
    sorted
}

fn match_families(canon: [i64; 3]) -> Option<(ClassTag, Abc)> {
    let [e, o1, o2] = canon;
    if e % 2 != 0 {
        return None;
    }
    if e < 0 && o1 >= 3 && o2 >= 3 {
        return Some((ClassTag::Thm1, Abc::new(-e / 2, (o1 - 1) / 2, (o2 - 1) / 2)));
    }
    if e > 0 && o1 <= -3 && o2 >= 3 {
        return Some((ClassTag::Thm2, Abc::new(e / 2, (-o1 - 1) / 2, (o2 - 1) / 2)));
    }
    None
}

/// Classifies an arbitrary integer triple.
pub fn classify(p1: i64, p2: i64, p3: i64) -> PretzelClass {
    let bands = [p1, p2, p3];
    let canonical = canonical_order(bands);
    let out_of_scope = |tag, reason: &str| PretzelClass {
        tag,
        abc: None,
        mirrored: false,
        canonical,
        reason: Some(reason.to_string()),
    };

    if let Some(reason) = degeneracy(bands) {
        return out_of_scope(ClassTag::NotAKnot, reason);
    }
    if bands.iter().all(|p| p % 2 != 0) {
        return out_of_scope(ClassTag::PriorWork, "all bands odd");
    }

    if let Some((tag, abc)) = match_families(canonical) {
        return PretzelClass {
            tag,
            abc: Some(abc),
            mirrored: false,
            canonical,
            reason: None,
        };
    }
    if let Some((tag, abc)) = match_families(canonical_order(bands.map(|p| -p))) {
        let tag = match tag {
            ClassTag::Thm1 => ClassTag::MirrorThm1,
            _ => ClassTag::MirrorThm2,
        };
        return PretzelClass {
            tag,
            abc: Some(abc),
            mirrored: true,
            canonical,
            reason: None,
        };
    }

    let [e, o1, o2] = canonical;
    let reason = if o1.abs() == 1 || o2.abs() == 1 {
        "a band with a single crossing gives a two-bridge knot"
    } else if (e > 0) == (o1 > 0) && (o1 > 0) == (o2 > 0) {
        "all bands of one handedness give an alternating diagram"
    } else {
        "sign pattern outside both computed families"
    };
    out_of_scope(ClassTag::PriorWork, reason)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramInfo {
    pub heegaard_genus: u64,
    pub crossing_count: u64,
    pub band_crossings: [u64; 3],
}

/// Heegaard genus and crossing counts of the standard family-1 projection.
pub fn diagram_info(cls: &PretzelClass) -> Result<DiagramInfo> {
    let Abc { a, b, c } = cls.family1_abc()?;
    let band_crossings = [2 * a, 2 * b + 1, 2 * c + 1].map(|n| n as u64);
    Ok(DiagramInfo {
        heegaard_genus: (2 * (a + b + c) + 3) as u64,
        crossing_count: band_crossings.iter().sum(),
        band_crossings,
    })
}

/// A generator raised to `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Self {
            generator,
            inverse: exponent < 0,
        }
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerPresentation {
    pub generator_count: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl WirtingerPresentation {
    /// The one-generator presentation of the unknot.
    pub fn unknot() -> Self {
        Self {
            generator_count: 1,
            relators: Vec::new(),
        }
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|word| {
                let mut row = vec![0; self.generator_count];
                for l in word {
                    row[l.generator] += l.exponent();
                }
                row
            })
            .collect()
    }

    pub fn check(&self) -> Result<()> {
        if self.generator_count == 0 {
            return Err(Error::MalformedPresentation("no generators".into()));
        }
        for (r, word) in self.relators.iter().enumerate() {
            if let Some(l) = word.iter().find(|l| l.generator >= self.generator_count) {
                return Err(Error::MalformedPresentation(format!(
                    "relator {r} uses generator {} of {}",
                    l.generator, self.generator_count
                )));
            }
            if word.iter().map(Letter::exponent).sum::<i64>() != 0 {
                return Err(Error::MalformedPresentation(format!(
                    "relator {r} has nonzero exponent sum"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One pass of the knot through a crossing.
#[derive(Clone, Copy, Debug)]
struct Passage {
    crossing: usize,
    over: bool,
    dir: (i64, i64),
}

/// Walks the standard projection once.
///
/// Band `i` is a vertical twist region with strands in a left and a right
/// column; levels `0..=n` sit between its crossings, top to bottom. At the top
/// and bottom, the right end of band `i` joins the left end of band `i + 1`
/// (band 3 wraps around to band 1). Positive bands have the strand from
/// top-left to bottom-right on top. Plane coordinates have `y` pointing down.
fn traverse(bands: [i64; 3]) -> Vec<Passage> {
    let len: Vec<usize> = bands.iter().map(|p| p.unsigned_abs() as usize).collect();
    let offset = [0, len[0], len[0] + len[1]];

    let start = (0usize, Side::Left, 0usize, true);
    let (mut band, mut side, mut level, mut down) = start;
    let mut passages = Vec::new();
    loop {
        let n = len[band];
        let at_end = if down { level == n } else { level == 0 };
        if at_end {
            // Cross over to the neighbouring band along a top or bottom arc.
            (band, side) = match side {
                Side::Right => ((band + 1) % 3, Side::Left),
                Side::Left => ((band + 2) % 3, Side::Right),
            };
            level = if down { len[band] } else { 0 };
            down = !down;
        } else {
            let row = if down { level } else { level - 1 };
            let dx = if side == Side::Left { 1 } else { -1 };
            let dy = if down { 1 } else { -1 };
            // Strand joining top-left to bottom-right?
            let tl_br = (side == Side::Left) == down;
            passages.push(Passage {
                crossing: offset[band] + row,
                over: tl_br == (bands[band] > 0),
                dir: (dx, dy),
            });
            side = side.flip();
            level = if down { level + 1 } else { level - 1 };
        }
        if (band, side, level, down) == start {
            break;
        }
    }
    passages
}

/// Wirtinger presentation of the standard projection.
///
/// Generator `c` is the arc leaving crossing `c` as the under strand, with
/// crossings numbered band by band, top to bottom. Relator `c` encodes
/// `x_out = x_over^e x_in x_over^-e`, where `e` is the crossing sign.
pub fn wirtinger(params: &PretzelParams) -> WirtingerPresentation {
    let passages = traverse(params.bands());
    let n = params.crossing_count();
    debug_assert_eq!(
        passages.len(),
        2 * n,
        "projection is not a single component"
    );

    let unders: Vec<usize> = (0..passages.len()).filter(|&i| !passages[i].over).collect();
    // The arc covering passage `i` is the one that started at the last under
    // passage strictly before `i` (cyclically).
    let arc_at = |i: usize| -> usize {
        let k = unders.partition_point(|&u| u < i);
        let prev = if k == 0 {
            *unders.last().unwrap()
        } else {
            unders[k - 1]
        };
        passages[prev].crossing
    };

    let mut over_at = vec![None; n];
    for (i, p) in passages.iter().enumerate() {
        if p.over {
            over_at[p.crossing] = Some((arc_at(i), p.dir));
        }
    }

    let mut relators = vec![Vec::new(); n];
    for &i in &unders {
        let under = passages[i];
        let c = under.crossing;
        let (over_arc, odir) = over_at[c].expect("every crossing has an over passage");
        let sign = (odir.0 * under.dir.1 - odir.1 * under.dir.0).signum() as i8;
        let incoming = arc_at(i);
        relators[c] = vec![
            Letter::new(over_arc, sign),
            Letter::new(incoming, 1),
            Letter::new(over_arc, -sign),
            Letter::new(c, -1),
        ];
    }
    WirtingerPresentation {
        generator_count: n,
        relators,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snf::integer_rank;
    use proptest::prelude::*;

    #[test]
    fn classify_examples() {
        let k = classify(-2, 3, 3);
        assert_eq!(k.tag, ClassTag::Thm1);
        assert_eq!(k.abc, Some(Abc::new(1, 1, 1)));
        assert!(!k.mirrored);

        let k = classify(2, -3, 3);
        assert_eq!(k.tag, ClassTag::Thm2);
        assert_eq!(k.abc, Some(Abc::new(1, 1, 1)));
        assert!(!k.mirrored);

        assert_eq!(classify(3, 5, 7).tag, ClassTag::PriorWork);
        let k = classify(2, 4, 3);
        assert_eq!(k.tag, ClassTag::NotAKnot);
        assert!(k.reason.unwrap().contains("even"));
    }

    #[test]
    fn classify_edge_cases() {
        assert_eq!(classify(0, 3, 5).tag, ClassTag::NotAKnot);
        assert_eq!(classify(-2, 1, 5).tag, ClassTag::PriorWork);
        assert_eq!(classify(2, 3, 5).tag, ClassTag::PriorWork);
        assert_eq!(classify(-2, -3, -5).tag, ClassTag::PriorWork);

        let k = classify(2, -3, -5);
        assert_eq!((k.tag, k.mirrored), (ClassTag::MirrorThm1, true));
        assert_eq!(k.abc, Some(Abc::new(1, 1, 2)));

        let k = classify(-4, 3, -7);
        assert_eq!((k.tag, k.mirrored), (ClassTag::MirrorThm2, true));
        assert_eq!(k.abc, Some(Abc::new(2, 1, 3)));

        // Canonical position: the even band first, then odd bands by value.
        assert_eq!(classify(7, -6, 3).canonical, [-6, 3, 7]);
    }

    #[test]
    fn diagram_info_examples() {
        let d = diagram_info(&PretzelClass::family1(Abc::new(1, 1, 1))).unwrap();
        assert_eq!(d.heegaard_genus, 9);
        assert_eq!(d.band_crossings, [2, 3, 3]);
        let d = diagram_info(&PretzelClass::family1(Abc::new(2, 2, 2))).unwrap();
        assert_eq!(d.heegaard_genus, 15);
        let d = diagram_info(&PretzelClass::family1(Abc::new(1, 2, 3))).unwrap();
        assert_eq!(d.crossing_count, 14);

        let err = diagram_info(&classify(2, -3, 3)).unwrap_err();
        assert!(matches!(
            err,
            Error::UnsupportedTag {
                got: ClassTag::Thm2,
                ..
            }
        ));
        assert!(diagram_info(&classify(3, 5, 7)).is_err());
        // Mirrors share the diagram data.
        assert_eq!(
            diagram_info(&classify(2, -3, -3)).unwrap().heegaard_genus,
            9
        );
    }

    #[test]
    fn params_validation() {
        assert!(PretzelParams::new(1, 0, 3).is_err());
        assert!(PretzelParams::new(2, 4, 3).is_err());
        assert!(PretzelParams::new(-2, 3, 3).is_ok());
    }

    #[test]
    fn trefoil_presentation() {
        let w = wirtinger(&PretzelParams::new(1, 1, 1).unwrap());
        assert_eq!(w.generator_count, 3);
        assert_eq!(w.relators.len(), 3);
        w.check().unwrap();
        for r in &w.relators {
            assert_eq!(r.iter().map(Letter::exponent).sum::<i64>(), 0);
        }
    }

    #[test]
    fn family1_presentation_size() {
        let w = wirtinger(&PretzelParams::new(-2, 3, 3).unwrap());
        assert_eq!(w.generator_count, 8);
        assert_eq!(w.relators.len(), 8);
        assert_eq!(integer_rank(&w.exponent_matrix()), 7);
    }

    #[test]
    fn traversal_visits_each_crossing_over_and_under() {
        for bands in [[-2, 3, 3], [2, -5, 3], [1, 1, 1], [-3, 5, 7], [4, 3, -3]] {
            let passages = traverse(bands);
            let n: usize = bands.iter().map(|p| p.unsigned_abs() as usize).sum();
            assert_eq!(passages.len(), 2 * n);
            let mut overs = vec![0; n];
            let mut unders = vec![0; n];
            for p in passages {
                if p.over {
                    overs[p.crossing] += 1;
                } else {
                    unders[p.crossing] += 1;
                }
            }
            assert!(overs.iter().chain(&unders).all(|&k| k == 1), "{bands:?}");
        }
    }

    fn knot_triple() -> impl Strategy<Value = [i64; 3]> {
        prop::array::uniform3(prop_oneof![-7i64..=-1, 1i64..=7])
            .prop_filter("knot", |t| t.iter().filter(|p| *p % 2 == 0).count() <= 1)
    }

    proptest! {
        #[test]
        fn classify_is_permutation_invariant(t in prop::array::uniform3(-9i64..=9)) {
            let base = classify(t[0], t[1], t[2]);
            for [i, j, k] in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let other = classify(t[i], t[j], t[k]);
                prop_assert_eq!(&other, &base);
            }
        }

        #[test]
        fn classify_mirror_toggles(t in prop::array::uniform3(-9i64..=9)) {
            let k = classify(t[0], t[1], t[2]);
            let m = classify(-t[0], -t[1], -t[2]);
            if k.tag.is_computed() {
                prop_assert_eq!(k.abc, m.abc);
                prop_assert_eq!(k.mirrored, !m.mirrored);
                prop_assert_eq!(k.tag.is_family1(), m.tag.is_family1());
            } else {
                prop_assert_eq!(k.tag, m.tag);
            }
        }

        #[test]
        fn wirtinger_abelianizes_to_z(t in knot_triple()) {
            let w = wirtinger(&PretzelParams::new(t[0], t[1], t[2]).unwrap());
            prop_assert!(w.check().is_ok());
            prop_assert_eq!(w.relators.len(), w.generator_count);
            prop_assert_eq!(integer_rank(&w.exponent_matrix()), w.generator_count - 1);
        }
    }
}
