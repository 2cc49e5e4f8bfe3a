//! Builders for the three standard families: groups, posets, and path
//! categories of acyclic quivers. Each one emits a raw table and runs it
//! through [`validate_category`], so the output is always a valid category.

use std::collections::HashMap;

use super::spec::{CategorySpec, GroupSpec, IdentityMap, MorphismSpec, PosetSpec, QuiverSpec};
use super::{validate_category, CategoryError, FiniteCategory};

fn index_of<'a>(names: &'a [String]) -> Result<HashMap<&'a str, usize>, CategoryError> {
    let mut out = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.as_str(), i).is_some() {
            return Err(CategoryError::Malformed(format!("duplicate name {n:?}")));
        }
    }
    Ok(out)
}

fn lookup(idx: &HashMap<&str, usize>, name: &str) -> Result<usize, CategoryError> {
    idx.get(name)
        .copied()
        .ok_or_else(|| CategoryError::Malformed(format!("unknown name {name:?}")))
}

/// One object whose endomorphisms are the group elements.
pub fn build_group_category(spec: &GroupSpec) -> Result<FiniteCategory, CategoryError> {
    let n = spec.elements.len();
    let idx = index_of(&spec.elements)?;
    if n == 0 || spec.table.len() != n || spec.table.iter().any(|r| r.len() != n) {
        return Err(CategoryError::Malformed(format!("table must be {n} x {n}")));
    }
    let mut mul = vec![vec![0usize; n]; n];
    for (i, row) in spec.table.iter().enumerate() {
        for (j, name) in row.iter().enumerate() {
            mul[i][j] = lookup(&idx, name)?;
        }
    }
    let name = |i: usize| spec.elements[i].clone();
    let e = (0..n)
        .find(|&e| (0..n).all(|j| mul[e][j] == j && mul[j][e] == j))
        .ok_or_else(|| CategoryError::NotAGroup("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(CategoryError::NotAGroup(format!(
                        "({0}*{1})*{2} != {0}*({1}*{2})",
                        name(a),
                        name(b),
                        name(c)
                    )));
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| mul[a][b] == e && mul[b][a] == e) {
            return Err(CategoryError::NotAGroup(format!("{} has no inverse", name(a))));
        }
    }

    let object = spec.object.clone().unwrap_or_else(|| "x".to_string());
    let mut composition = Vec::new();
    for a in (0..n).filter(|&a| a != e) {
        for b in (0..n).filter(|&b| b != e) {
            composition.push([name(a), name(b), name(mul[a][b])]);
        }
    }
    let cat = CategorySpec {
        objects: vec![object.clone()],
        morphisms: spec
            .elements
            .iter()
            .map(|g| MorphismSpec { id: g.clone(), dom: object.clone(), cod: object.clone() })
            .collect(),
        identities: IdentityMap(vec![(object, name(e))]),
        composition,
    };
    validate_category(&cat)
}

/// One morphism `x -> y` for each `x <= y` in the reflexive-transitive closure.
pub fn build_poset_category(spec: &PosetSpec) -> Result<FiniteCategory, CategoryError> {
    let n = spec.elements.len();
    let idx = index_of(&spec.elements)?;
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for [a, b] in &spec.relation {
        le[lookup(&idx, a)?][lookup(&idx, b)?] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if le[i][k] {
                for j in 0..n {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if le[i][j] && le[j][i] {
                return Err(CategoryError::NotAntisymmetric(spec.elements[i].clone(), spec.elements[j].clone()));
            }
        }
    }
    let mor_name = |i: usize, j: usize| {
        if i == j {
            format!("1_{}", spec.elements[i])
        } else {
            format!("{}->{}", spec.elements[i], spec.elements[j])
        }
    };
    let mut morphisms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                morphisms.push(MorphismSpec {
                    id: mor_name(i, j),
                    dom: spec.elements[i].clone(),
                    cod: spec.elements[j].clone(),
                });
            }
        }
    }
    let mut composition = Vec::new();
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x && le[x][y]) {
            for z in (0..n).filter(|&z| z != y && le[y][z]) {
                composition.push([mor_name(y, z), mor_name(x, y), mor_name(x, z)]);
            }
        }
    }
    let cat = CategorySpec {
        objects: spec.elements.clone(),
        morphisms,
        identities: IdentityMap((0..n).map(|i| (spec.elements[i].clone(), mor_name(i, i))).collect()),
        composition,
    };
    validate_category(&cat)
}

/// Finds an oriented cycle, returned as arrow indices in traversal order.
fn find_cycle(n: usize, arrows: &[(usize, usize)]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(v: usize, arrows: &[(usize, usize)], mark: &mut [Mark], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        mark[v] = Mark::Active;
        for (a, &(s, t)) in arrows.iter().enumerate() {
            if s != v {
                continue;
            }
            stack.push(a);
            match mark[t] {
                Mark::Active => {
                    let start = stack.iter().position(|&b| arrows[b].0 == t).unwrap();
                    return Some(stack[start..].to_vec());
                }
                Mark::New => {
                    if let Some(c) = visit(t, arrows, mark, stack) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
            stack.pop();
        }
        mark[v] = Mark::Done;
        None
    }
    let mut mark = vec![Mark::New; n];
    for v in 0..n {
        if mark[v] == Mark::New {
            if let Some(c) = visit(v, arrows, &mut mark, &mut Vec::new()) {
                return Some(c);
            }
        }
    }
    None
}

/// The path category: all paths, with trivial paths as identities.
pub fn build_path_category(spec: &QuiverSpec) -> Result<FiniteCategory, CategoryError> {
    let n = spec.vertices.len();
    let idx = index_of(&spec.vertices)?;
    let arrow_names: Vec<String> = spec.arrows.iter().map(|[id, _, _]| id.clone()).collect();
    index_of(&arrow_names)?;
    let arrows: Vec<(usize, usize)> = spec
        .arrows
        .iter()
        .map(|[_, s, t]| Ok((lookup(&idx, s)?, lookup(&idx, t)?)))
        .collect::<Result<_, CategoryError>>()?;
    if let Some(cycle) = find_cycle(n, &arrows) {
        return Err(CategoryError::HasOrientedCycle(cycle.into_iter().map(|a| arrow_names[a].clone()).collect()));
    }

    // a path is (start vertex, arrows in traversal order)
    let mut paths: Vec<(usize, Vec<usize>)> = (0..n).map(|v| (v, vec![])).collect();
    let mut frontier: Vec<(usize, Vec<usize>)> = (0..arrows.len()).map(|a| (arrows[a].0, vec![a])).collect();
    while !frontier.is_empty() {
        paths.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for (s, p) in &frontier {
            let end = arrows[*p.last().unwrap()].1;
            for (a, &(src, _)) in arrows.iter().enumerate() {
                if src == end {
                    let mut q = p.clone();
                    q.push(a);
                    next.push((*s, q));
                }
            }
        }
        frontier = next;
    }
    let end = |(s, p): &(usize, Vec<usize>)| p.last().map_or(*s, |&a| arrows[a].1);
    let path_name = |(s, p): &(usize, Vec<usize>)| {
        if p.is_empty() {
            format!("1_{}", spec.vertices[*s])
        } else {
            p.iter().rev().map(|&a| arrow_names[a].as_str()).collect::<Vec<_>>().join("*")
        }
    };
    let lookup_path: HashMap<(usize, Vec<usize>), usize> =
        paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

    let mut composition = Vec::new();
    for f in paths.iter().filter(|p| !p.1.is_empty()) {
        for g in paths.iter().filter(|p| !p.1.is_empty() && p.0 == end(f)) {
            let mut gf = f.1.clone();
            gf.extend_from_slice(&g.1);
            let h = &paths[lookup_path[&(f.0, gf)]];
            composition.push([path_name(g), path_name(f), path_name(h)]);
        }
    }
    let cat = CategorySpec {
        objects: spec.vertices.clone(),
        morphisms: paths
            .iter()
            .map(|p| MorphismSpec {
                id: path_name(p),
                dom: spec.vertices[p.0].clone(),
                cod: spec.vertices[end(p)].clone(),
            })
            .collect(),
        identities: IdentityMap((0..n).map(|v| (spec.vertices[v].clone(), path_name(&paths[v]))).collect()),
        composition,
    };
    validate_category(&cat)
}
