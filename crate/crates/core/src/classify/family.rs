use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::iso::find_isomorphism;
use crate::classify::profile::InvariantProfile;
use crate::table::Quandle;

/// One isomorphism class of an input family.
#[derive(Debug, Clone, Serialize)]
pub struct IsoClass {
    /// Lexicographically least table among the members.
    #[serde(serialize_with = "serialize_rows")]
    pub representative: Quandle,
    pub profile: InvariantProfile,
    /// Zero-based input positions, ascending.
    pub members: Vec<usize>,
}

fn serialize_rows<S: serde::Serializer>(q: &Quandle, s: S) -> Result<S::Ok, S::Error> {
    crate::format::TableJson::from(q.as_magma()).serialize(s)
}

/// Partitions `qs` into isomorphism classes.
///
/// Classes are ordered by profile, then by representative table, so the
/// output does not depend on input order beyond the member indices.
pub fn classify_family(qs: &[Quandle]) -> Vec<IsoClass> {
    let mut buckets: BTreeMap<InvariantProfile, Vec<usize>> = BTreeMap::new();
    for (i, q) in qs.iter().enumerate() {
        buckets.entry(InvariantProfile::of(q)).or_default().push(i);
    }
    let mut out = Vec::new();
    for (profile, indices) in buckets {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in indices {
            match classes
                .iter_mut()
                .find(|c| find_isomorphism(&qs[c[0]], &qs[i]).is_some())
            {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        let mut built: Vec<IsoClass> = classes
            .into_iter()
            .map(|members| {
                let rep = members
                    .iter()
                    .map(|&i| &qs[i])
                    .min_by(|a, b| a.cells().cmp(b.cells()))
                    .expect("class is non-empty")
                    .clone();
                IsoClass {
                    representative: rep,
                    profile: profile.clone(),
                    members,
                }
            })
            .collect();
        built.sort_by(|a, b| a.representative.cells().cmp(b.representative.cells()));
        out.extend(built);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{dihedral, trivial, Permutation};

    #[test]
    fn singleton_family() {
        let classes = classify_family(&[dihedral(3).unwrap()]);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members, vec![0]);
    }

    #[test]
    fn relabelings_collapse() {
        let d = dihedral(4).unwrap();
        let sigma = Permutation::from_images(&[2, 3, 4, 1]).unwrap();
        let fam = vec![d.clone(), trivial(4).unwrap(), d.relabel(&sigma)];
        let classes = classify_family(&fam);
        assert_eq!(classes.len(), 2);
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert!(sizes.contains(&2));
    }
}
