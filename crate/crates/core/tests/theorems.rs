mod common;

use biplanarity::enumeration::enumerate_triangulations;
use biplanarity::kuratowski::{verify, CertificateKind};
use biplanarity::planarity::subdivision_oracle;
use biplanarity::theorems::{
    claim1_check, claim2_witness, classify_chords, nu_upper_bound, shrink_outer_face, theorem2_certificate,
    theorem2_instances, theorem2_sweep, ChordCase, Claim1Outcome, Theorem2Instance, TheoremError,
};
use biplanarity::{is_planar, BiplanarPair, Face, Graph, RotationSystem};
use common::smallest_n_exceeding;

/// Pentagon `0..5` with the given edges drawn in order. Each edge goes into
/// the unique internal face holding its drawn endpoints and the listed hints.
fn draw(steps: &[(usize, usize, &[usize])]) -> Result<Theorem2Instance, TheoremError> {
    let mut e = is_planar(&Graph::from_edges(8, &Graph::cycle(5).edges().collect::<Vec<_>>()).unwrap())
        .into_embedding()
        .unwrap();
    for &(u, v, hints) in steps {
        let outer = e.outer_face().cloned();
        let needed: Vec<usize> = [u, v]
            .into_iter()
            .filter(|&x| e.graph().degree(x) > 0)
            .chain(hints.iter().copied())
            .collect();
        let faces: Vec<Face> = e
            .faces()
            .into_iter()
            .filter(|f| Some(f) != outer.as_ref() && needed.iter().all(|&x| f.contains(x)))
            .collect();
        assert_eq!(faces.len(), 1, "{u} {v} {hints:?}");
        e = e.insert_edge_in_face(u, v, &faces[0]).unwrap();
    }
    Theorem2Instance::new(e)
}

fn instance(steps: &[(usize, usize, &[usize])]) -> Theorem2Instance {
    draw(steps).unwrap()
}

fn face_with(inst: &Theorem2Instance, vs: &[usize]) -> Face {
    inst.internal_faces()
        .into_iter()
        .find(|f| f.len() == vs.len() && vs.iter().all(|&v| f.contains(v)))
        .unwrap()
}

#[test]
fn zero_chord_instance() {
    // Hub 6 sees the whole pentagon; 5 sits by a1 a2, 7 by a3 a4.
    let inst = instance(&[
        (6, 0, &[]),
        (6, 1, &[]),
        (6, 2, &[]),
        (6, 3, &[]),
        (6, 4, &[]),
        (5, 0, &[1, 6]),
        (5, 1, &[]),
        (7, 2, &[3, 6]),
        (7, 3, &[]),
    ]);
    assert!(inst.is_restricted_maximal());
    assert_eq!(classify_chords(&inst).unwrap(), ChordCase::ZeroChords);
    let pentagon = face_with(&inst, &[0, 1, 2, 3, 4]);
    assert_eq!(claim2_witness(&inst, &pentagon), Ok(6));
    let cert = theorem2_certificate(&inst).unwrap();
    assert_eq!(cert.certificate.kind, CertificateKind::ConditionIi);
    assert_eq!((cert.u, cert.v, cert.w), (5, 6, 7));
    assert_eq!(cert.a[0], 4);
    let comp = inst.embedding().graph().complement();
    assert_eq!(verify(&comp, &cert.certificate), Ok(true));
    assert!(subdivision_oracle(&comp).unwrap().is_some());
}

#[test]
fn one_chord_instance() {
    // Chord (a2, a5); 6 fills the quadrilateral, 5 the cut-off triangle.
    let inst = instance(&[
        (1, 4, &[]),
        (6, 1, &[2]),
        (6, 2, &[]),
        (6, 3, &[]),
        (6, 4, &[]),
        (5, 0, &[]),
        (5, 1, &[]),
        (5, 4, &[]),
        (7, 2, &[3]),
        (7, 3, &[]),
    ]);
    assert!(inst.is_restricted_maximal());
    let case = classify_chords(&inst).unwrap();
    assert!(matches!(case, ChordCase::OneChord { chord } if chord == (4, 1) || chord == (1, 4)));
    let quad = face_with(&inst, &[1, 2, 3, 4]);
    assert_eq!(claim2_witness(&inst, &quad), Ok(6));
    let triangle = face_with(&inst, &[0, 1, 4]);
    assert_eq!(claim2_witness(&inst, &triangle), Ok(5));
    let cert = theorem2_certificate(&inst).unwrap();
    assert_eq!(cert.certificate.kind, CertificateKind::ConditionI);
    assert_eq!(cert.a[0], 0);
    assert_eq!(cert.v, 6);
    let comp = inst.embedding().graph().complement();
    assert_eq!(verify(&comp, &cert.certificate), Ok(true));
    assert!(subdivision_oracle(&comp).unwrap().is_some());
}

#[test]
fn two_chord_instance() {
    let inst = instance(&[
        (0, 2, &[]),
        (0, 3, &[]),
        (5, 0, &[1]),
        (5, 1, &[]),
        (5, 2, &[]),
        (6, 0, &[2, 3]),
        (6, 2, &[]),
        (6, 3, &[]),
        (7, 0, &[4]),
        (7, 3, &[]),
        (7, 4, &[]),
    ]);
    assert!(inst.is_restricted_maximal());
    assert!(matches!(
        classify_chords(&inst).unwrap(),
        ChordCase::TwoChords { shared: 0, .. }
    ));
    let cert = theorem2_certificate(&inst).unwrap();
    assert_eq!(cert.certificate.kind, CertificateKind::ConditionIi);
    assert_eq!(cert.a, [0, 1, 2, 3, 4]);
    assert_eq!(
        verify(&inst.embedding().graph().complement(), &cert.certificate),
        Ok(true)
    );
}

#[test]
fn non_maximal_face_has_no_claim2_witness() {
    // 5 and 6 each see only two corners of the pentagon.
    let inst = instance(&[
        (5, 0, &[]),
        (5, 1, &[]),
        (6, 2, &[3]),
        (6, 3, &[]),
        (7, 3, &[4]),
        (7, 4, &[]),
    ]);
    assert!(!inst.is_restricted_maximal());
    let pentagon = face_with(&inst, &[0, 1, 2, 3, 4]);
    assert!(matches!(
        claim2_witness(&inst, &pentagon),
        Err(TheoremError::NoFullyAdjacentVertex(_))
    ));
    let outer = inst.embedding().outer_face().unwrap().clone();
    assert!(matches!(
        claim2_witness(&inst, &outer),
        Err(TheoremError::NotAnInternalFace(_))
    ));
}

#[test]
fn instance_rejects_interior_edges() {
    let err = draw(&[(5, 0, &[]), (6, 1, &[]), (7, 2, &[]), (5, 6, &[])]).unwrap_err();
    assert_eq!(err, TheoremError::InteriorEdge { u: 5, v: 6 });
    let err = draw(&[(5, 0, &[]), (6, 1, &[])]).unwrap_err();
    assert_eq!(err, TheoremError::IsolatedInterior(7));
}

#[test]
fn generated_family_always_certifies() {
    let report = theorem2_sweep().unwrap();
    assert!(report.failures.is_empty(), "{:?}", report.failures);
    assert!(report.zero_chords > 0 && report.one_chord > 0 && report.two_chords > 0);
    assert_eq!(
        report.instances,
        report.zero_chords + report.one_chord + report.two_chords
    );
}

#[test]
fn generated_instances_against_oracle() {
    let instances = theorem2_instances().unwrap();
    for inst in &instances {
        assert!(inst.is_restricted_maximal());
        let case = classify_chords(inst).unwrap();
        for f in inst.internal_faces() {
            if !inst.interior_in_face(&f).unwrap().is_empty() {
                claim2_witness(inst, &f).unwrap();
            }
        }
        let comp = inst.embedding().graph().complement();
        assert!(subdivision_oracle(&comp).unwrap().is_some());
        let fully_triangulated =
            inst.embedding().faces().iter().filter(|f| f.len() == 3).count() == inst.embedding().faces().len() - 1;
        if fully_triangulated {
            assert!(matches!(case, ChordCase::TwoChords { .. }));
        }
    }
}

#[test]
fn claim1_over_every_outer_face() {
    let mut small_degree = 0;
    for t in enumerate_triangulations(9).unwrap().members() {
        let e = is_planar(t).into_embedding().unwrap();
        let faces = e.faces();
        assert_eq!(faces.len(), 14);
        for f in faces {
            let e = e.clone().with_outer_face(&f).unwrap();
            match claim1_check(&e).unwrap() {
                Claim1Outcome::HighDegree { vertex, degree } => {
                    assert!(f.contains(vertex));
                    assert!(degree >= 5);
                    assert_eq!(t.degree(vertex), degree);
                }
                Claim1Outcome::K33InComplement { certificate } => {
                    small_degree += 1;
                    assert!(f.boundary().iter().all(|&v| t.degree(v) <= 4));
                    assert_eq!(verify(&t.complement(), &certificate), Ok(true));
                }
                Claim1Outcome::ComplementNonplanar { witness } => {
                    small_degree += 1;
                    witness.validate(&t.complement()).unwrap();
                }
            }
        }
    }
    assert!(small_degree > 0);
}

#[test]
fn claim1_high_degree_vertex() {
    let t = enumerate_triangulations(9)
        .unwrap()
        .members()
        .iter()
        .find(|t| (0..9).any(|v| t.degree(v) == 7))
        .unwrap();
    let hub = (0..9).find(|&v| t.degree(v) == 7).unwrap();
    let e = is_planar(t).into_embedding().unwrap();
    let f = e.faces().into_iter().find(|f| f.contains(hub)).unwrap();
    let outcome = claim1_check(&e.with_outer_face(&f).unwrap()).unwrap();
    assert!(matches!(outcome, Claim1Outcome::HighDegree { degree, .. } if degree >= 5));
}

#[test]
fn claim1_rejects_non_triangulations() {
    let e = is_planar(&Graph::wheel(8)).into_embedding().unwrap();
    assert_eq!(claim1_check(&e), Err(TheoremError::NotATriangulation));
    let e = is_planar(&Graph::complete(4)).into_embedding().unwrap();
    assert!(matches!(claim1_check(&e), Err(TheoremError::WrongVertexCount { .. })));
}

/// `K8` pairs made from a 9-vertex triangulation minus a vertex `r` whose
/// complement minus `r` is planar. The hole left by `r` is a `deg(r)`-cycle.
fn shrink_inputs(degree: usize) -> Vec<(BiplanarPair, Face, Vec<Face>)> {
    let mut out = Vec::new();
    for t in enumerate_triangulations(9).unwrap().members() {
        let e = is_planar(t).into_embedding().unwrap();
        for r in (0..9).filter(|&r| t.degree(r) == degree) {
            let Some(second) = is_planar(&t.complement().delete_vertex(r)).into_embedding() else {
                continue;
            };
            let (first, hole) = e.delete_vertex(r).unwrap();
            let first = first.with_outer_face(&hole).unwrap();
            let faces = second.faces().into_iter().filter(|f| f.vertices().len() >= 3).collect();
            out.push((BiplanarPair::complete(first, second).unwrap(), hole, faces));
        }
    }
    out
}

#[test]
fn shrink_pentagon_is_identity() {
    let inputs = shrink_inputs(5);
    assert!(!inputs.is_empty());
    for (p, hole, faces) in inputs {
        let o = shrink_outer_face(&p, &hole, &faces[0]).unwrap();
        assert!(o.steps.is_empty());
        assert_eq!(o.pair.first().graph(), p.first().graph());
        assert_eq!(o.f_bar, faces[0]);
    }
}

#[test]
fn shrink_removes_one_vertex_per_step() {
    let mut runs = 0;
    for degree in 6..=8 {
        for (p, hole, faces) in shrink_inputs(degree) {
            for f_bar in faces {
                let o = shrink_outer_face(&p, &hole, &f_bar).unwrap();
                runs += 1;
                assert_eq!(o.steps.len(), degree - 5);
                o.pair.validate().unwrap();
                let outer = o.pair.first().outer_face().unwrap();
                assert!(outer.is_simple_cycle(5));
                assert!(o.pair.second().is_face(&o.f_bar));
                let mut boundary = hole.vertices();
                for step in &o.steps {
                    assert!(boundary.contains(step.s));
                    assert!(o.pair.first().graph().has_edge(step.x, step.y));
                    boundary.remove(step.s);
                }
                assert_eq!(outer.vertices(), boundary);
                let off: Vec<usize> = (0..8).filter(|&v| !outer.contains(v) && !o.f_bar.contains(v)).collect();
                assert_eq!(o.off_both, off);
            }
        }
    }
    assert!(runs > 0);
}

#[test]
fn shrink_input_errors() {
    let (p, hole, faces) = shrink_inputs(6).remove(0);
    let inner = p.first().faces().into_iter().find(|f| f.len() == 3).unwrap();
    assert!(matches!(
        shrink_outer_face(&p, &inner, &faces[0]),
        Err(TheoremError::BadOuterFace(_))
    ));
    assert!(matches!(
        shrink_outer_face(&p, &hole, &hole),
        Err(TheoremError::UnknownSecondFace(_))
    ));
    let sub = BiplanarPair::new(
        p.host().without_edge(hole.boundary()[0], hole.boundary()[1]),
        p.first().remove_edge(hole.boundary()[0], hole.boundary()[1]).unwrap(),
        p.second().clone(),
    )
    .unwrap();
    assert_eq!(
        shrink_outer_face(&sub, sub.first().outer_face().unwrap(), &faces[0]).unwrap_err(),
        TheoremError::HostNotComplete
    );
}

#[test]
fn nu_bound_matches_edge_count_search() {
    assert_eq!(nu_upper_bound(1), Ok(5));
    assert_eq!(nu_upper_bound(2), Ok(11));
    assert_eq!(nu_upper_bound(3), Ok(17));
    assert_eq!(nu_upper_bound(0), Err(TheoremError::KTooSmall));
    let mut prev = 0;
    for k in 1..=500 {
        let value = nu_upper_bound(k).unwrap();
        assert_eq!(value, smallest_n_exceeding(k), "k = {k}");
        assert!(value >= prev);
        prev = value;
    }
}

#[test]
fn instance_serializes() {
    let inst = theorem2_instances().unwrap().remove(0);
    let text = serde_json::to_string(&inst).unwrap();
    let back: Theorem2Instance = serde_json::from_str(&text).unwrap();
    assert_eq!(back, inst);
    let _: RotationSystem = back.embedding().clone();
}
