use super::pd::PDCode;
use crate::error::Result;
use crate::fpgroup::{FreeWord, Presentation, PresentationKind};

/// A knot group presentation read off a diagram, with peripheral data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramPresentation {
    pub presentation: Presentation,
    /// Index of the generator used as the meridian.
    pub meridian: usize,
    /// Longitude commuting with the meridian, with zero exponent sum.
    pub longitude: FreeWord,
    pub writhe: i64,
}

/// Arc index of each edge (`result[e]` for `e` in `1..=2n`, index 0 unused).
///
/// An arc is a maximal run of edges joined by over-passages. Arcs are
/// numbered in the order they start when walking the knot from the smallest
/// edge that leaves an under-passage, which is also returned.
fn arcs(pd: &PDCode) -> (Vec<usize>, usize) {
    let edges = pd.edge_count() as usize;
    let mut parent: Vec<usize> = (0..=edges).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for x in pd.crossings() {
        let (a, b) = (find(&mut parent, x[1] as usize), find(&mut parent, x[3] as usize));
        parent[a] = b;
    }
    let start = pd
        .crossings()
        .iter()
        .map(|x| x[2] as usize)
        .min()
        .expect("a PD code has crossings");
    let mut label = vec![usize::MAX; edges + 1];
    let mut root_label = vec![usize::MAX; edges + 1];
    let mut next = 0;
    for step in 0..edges {
        let e = (start - 1 + step) % edges + 1;
        let r = find(&mut parent, e);
        if root_label[r] == usize::MAX {
            root_label[r] = next;
            next += 1;
        }
        label[e] = root_label[r];
    }
    (label, start)
}

fn generator_names(count: usize) -> Vec<String> {
    if count <= 26 {
        (0..count).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..count).map(|i| format!("x{i}")).collect()
    }
}

/// The Wirtinger presentation: one generator per arc, one conjugation
/// relator per crossing except the last, which is redundant.
///
/// At a crossing with sign `e`, incoming under-arc `u`, outgoing under-arc
/// `v` and over-arc `o`, the relator is `v o^e u^-1 o^-e`.
pub fn wirtinger(pd: &PDCode) -> Result<DiagramPresentation> {
    let (arc, start) = arcs(pd);
    let n = pd.crossing_count();
    let relator = |c: usize| {
        let x = pd.crossings()[c];
        let e = pd.sign(c);
        let (u, v, o) = (arc[x[0] as usize], arc[x[2] as usize], arc[x[1] as usize]);
        FreeWord::from_syllables([(v, 1), (o, e), (u, -1), (o, -e)])
    };
    let relators: Vec<FreeWord> = (0..n.saturating_sub(1))
        .map(relator)
        .filter(|r| !r.is_identity())
        .collect();

    // Walk from the start of arc 0, recording the over-arc at every
    // under-passage; the word is accumulated right to left.
    let edges = pd.edge_count() as usize;
    let mut under_at = vec![None; edges + 1];
    for (c, x) in pd.crossings().iter().enumerate() {
        under_at[x[0] as usize] = Some(c);
    }
    let mut w = FreeWord::identity();
    for step in 0..edges {
        let e = (start - 1 + step) % edges + 1;
        if let Some(c) = under_at[e] {
            let o = arc[pd.crossings()[c][1] as usize];
            w = FreeWord::power_of(o, pd.sign(c)).mul(&w);
        }
    }
    let writhe = pd.writhe();
    let longitude = w.mul(&FreeWord::power_of(0, -writhe));

    let gens = arc.iter().skip(1).copied().max().unwrap_or(0) + 1;
    let presentation = Presentation::new(generator_names(gens), relators)?
        .with_peripheral("meridian", FreeWord::generator(0))?
        .with_peripheral("longitude", longitude.clone())?
        .with_kind(PresentationKind::Wirtinger);
    Ok(DiagramPresentation {
        presentation,
        meridian: 0,
        longitude,
        writhe,
    })
}

/// Zero surgery: add the longitude as a relator (unless it is trivial).
pub fn zero_surgery(d: &DiagramPresentation) -> Result<Presentation> {
    if d.longitude.is_identity() {
        return Ok(d.presentation.clone().with_kind(PresentationKind::ZeroSurgery));
    }
    Ok(d
        .presentation
        .with_relator(d.longitude.clone())?
        .with_kind(PresentationKind::ZeroSurgery))
}
