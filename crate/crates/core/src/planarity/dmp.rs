//! Path-addition embedding (Demoucron, Malgrange, Pertuiset) per biconnected
//! block, glued at cut vertices by concatenating block rotations.

use crate::graph::{Graph, VertexSet};

/// Rotation lists for a plane embedding of `g`, or `None` if `g` is not planar.
pub(crate) fn embed(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut adj = [0u16; 16];
        let mut verts = 0u16;
        for &(u, v) in &block {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            verts |= (1 << u) | (1 << v);
        }
        let faces = embed_biconnected(&adj, verts, block.len())?;
        let block_rotation = rotation_from_faces(&adj, verts, &faces);
        for v in VertexSet::from_bits(verts).iter() {
            rotation[v].extend_from_slice(&block_rotation[v]);
        }
    }
    Some(rotation)
}

/// Biconnected blocks as edge lists (Hopcroft-Tarjan).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: [u8; 16],
        low: [u8; 16],
        time: u8,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn visit(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for w in s.g.neighbors(u).iter() {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                visit(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let mut s = State {
        g,
        disc: [0; 16],
        low: [0; 16],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..g.vertex_count() {
        if s.disc[v] == 0 {
            visit(&mut s, v, usize::MAX);
        }
    }
    s.out
}

enum Fragment {
    Edge(usize, usize),
    Component(u16),
}

/// Faces (as oriented vertex cycles) of a plane embedding of a 2-connected
/// graph, or `None` when some fragment has no admissible face.
fn embed_biconnected(adj: &[u16; 16], verts: u16, edge_total: usize) -> Option<Vec<Vec<usize>>> {
    let cycle = initial_cycle(adj, verts);
    let mut hadj = [0u16; 16];
    let mut hverts = 0u16;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        hadj[a] |= 1 << b;
        hadj[b] |= 1 << a;
        hverts |= 1 << a;
    }
    let mut embedded = cycle.len();
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    while embedded < edge_total {
        let masks: Vec<u16> = faces
            .iter()
            .map(|f| f.iter().fold(0u16, |m, &v| m | (1 << v)))
            .collect();
        let mut chosen: Option<(Fragment, u16, usize)> = None;
        let mut forced = false;
        for (frag, attach) in fragments(adj, verts, &hadj, hverts) {
            let mut admissible = masks.iter().enumerate().filter(|(_, &m)| attach & !m == 0);
            let first = admissible.next()?.0;
            let unique = admissible.next().is_none();
            if unique && !forced {
                chosen = Some((frag, attach, first));
                forced = true;
            } else if chosen.is_none() {
                chosen = Some((frag, attach, first));
            }
        }
        let (frag, attach, face_index) = chosen.expect("unembedded edges imply a fragment");
        let path = match frag {
            Fragment::Edge(u, v) => vec![u, v],
            Fragment::Component(comp) => component_path(adj, comp, attach),
        };
        for w in path.windows(2) {
            hadj[w[0]] |= 1 << w[1];
            hadj[w[1]] |= 1 << w[0];
        }
        for &v in &path {
            hverts |= 1 << v;
        }
        embedded += path.len() - 1;
        let (f1, f2) = split_face(&faces[face_index], &path);
        faces[face_index] = f1;
        faces.push(f2);
    }
    Some(faces)
}

fn initial_cycle(adj: &[u16; 16], verts: u16) -> Vec<usize> {
    let s = verts.trailing_zeros() as usize;
    let t = adj[s].trailing_zeros() as usize;
    // Shortest path from t back to s that avoids the edge ts.
    let mut parent = [usize::MAX; 16];
    let mut seen = 1u16 << t;
    let mut queue = std::collections::VecDeque::from([t]);
    while let Some(x) = queue.pop_front() {
        let mut next = adj[x] & !seen;
        if x == t {
            next &= !(1 << s);
        }
        for y in VertexSet::from_bits(next).iter() {
            seen |= 1 << y;
            parent[y] = x;
            queue.push_back(y);
        }
        if seen & (1 << s) != 0 {
            break;
        }
    }
    let mut cycle = vec![s];
    let mut x = s;
    while x != t {
        x = parent[x];
        cycle.push(x);
    }
    cycle
}

fn fragments(adj: &[u16; 16], verts: u16, hadj: &[u16; 16], hverts: u16) -> Vec<(Fragment, u16)> {
    let mut out = Vec::new();
    for u in VertexSet::from_bits(hverts).iter() {
        let pending = adj[u] & hverts & !hadj[u] & !((2u32 << u) - 1) as u16;
        for v in VertexSet::from_bits(pending).iter() {
            out.push((Fragment::Edge(u, v), (1 << u) | (1 << v)));
        }
    }
    let mut rest = verts & !hverts;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp = 1u16 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u16;
            for x in VertexSet::from_bits(frontier).iter() {
                next |= adj[x];
            }
            frontier = next & rest & !comp;
            comp |= frontier;
        }
        let attach = VertexSet::from_bits(comp).iter().fold(0u16, |m, x| m | adj[x]) & hverts;
        rest &= !comp;
        out.push((Fragment::Component(comp), attach));
    }
    out
}

/// Path through a component between two distinct attachment vertices.
fn component_path(adj: &[u16; 16], comp: u16, attach: u16) -> Vec<usize> {
    let a = attach.trailing_zeros() as usize;
    let others = attach & !(1 << a);
    let x = (adj[a] & comp).trailing_zeros() as usize;
    let mut parent = [usize::MAX; 16];
    let mut seen = 1u16 << x;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        if adj[y] & others != 0 {
            let b = (adj[y] & others).trailing_zeros() as usize;
            let mut inner = vec![y];
            let mut z = y;
            while z != x {
                z = parent[z];
                inner.push(z);
            }
            inner.reverse();
            let mut path = vec![a];
            path.extend(inner);
            path.push(b);
            return path;
        }
        for z in VertexSet::from_bits(adj[y] & comp & !seen).iter() {
            seen |= 1 << z;
            parent[z] = y;
            queue.push_back(z);
        }
    }
    unreachable!("a fragment of a 2-connected block has two attachments")
}

/// Splits an oriented face cycle along a path joining two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut first = Vec::new();
    let mut k = i;
    loop {
        first.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    first.extend(inner.iter().rev());

    let mut second = Vec::new();
    let mut k = j;
    loop {
        second.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    second.extend(inner.iter());
    (first, second)
}

/// Recovers rotations from consistently oriented faces: a walk `x -> y -> z`
/// means `z` follows `x` in the rotation at `y`.
fn rotation_from_faces(adj: &[u16; 16], verts: u16, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ = [[usize::MAX; 16]; 16];
    for f in faces {
        let len = f.len();
        for k in 0..len {
            let (x, y, z) = (f[k], f[(k + 1) % len], f[(k + 2) % len]);
            succ[y][x] = z;
        }
    }
    let mut rotation = vec![Vec::new(); 16];
    for y in VertexSet::from_bits(verts).iter() {
        let start = adj[y].trailing_zeros() as usize;
        let mut x = start;
        loop {
            rotation[y].push(x);
            x = succ[y][x];
            if x == start {
                break;
            }
        }
        debug_assert_eq!(rotation[y].len(), adj[y].count_ones() as usize);
    }
    rotation
}
