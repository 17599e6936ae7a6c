use super::*;

#[test]
fn parse_single_strand() {
    let d = SlicedDiagram::parse("top: v\nid+\n").unwrap();
    assert_eq!(d.top(), &[Orientation::Down]);
    assert_eq!(d.bottom(), &[Orientation::Down]);
    assert_eq!(arc_index(&d).n_arcs(), 1);
}

#[test]
fn parse_errors_carry_positions() {
    let err = SlicedDiagram::parse("top: v v\n# comment\nx+\ncap>\n").unwrap_err();
    assert_eq!(
        err,
        DiagramError::SignatureMismatch { slice: 2, line: Some(4), expected: "v v".into(), found: "v ^".into() }
    );
    assert!(err.to_string().starts_with("line 4:"));
    let err = SlicedDiagram::parse("top: v\n  id+ zz\n").unwrap_err();
    assert_eq!(err, DiagramError::UnknownToken { line: 2, column: 7, token: "zz".into() });
    assert_eq!(SlicedDiagram::parse("top: v\n").unwrap_err(), DiagramError::EmptyDiagram);
    assert_eq!(SlicedDiagram::parse("# nothing\n").unwrap_err(), DiagramError::EmptyDiagram);
    assert_eq!(SlicedDiagram::parse("id+\n").unwrap_err(), DiagramError::MissingHeader { line: 1 });
    assert!(matches!(SlicedDiagram::parse("top: v w\nid+\n"), Err(DiagramError::UnknownToken { column: 8, .. })));
}

#[test]
fn fixtures_round_trip() {
    let mut all = vec![trefoil_plus_string(), trefoil_minus_string(), figure_eight_string(), unknot_string()];
    all.push(closure(&trefoil_plus_string()).unwrap());
    for m in move_fixtures() {
        all.push(m.lhs);
        all.push(m.rhs);
    }
    for d in all {
        assert_eq!(SlicedDiagram::parse(&d.serialize()).unwrap(), d);
    }
}

#[test]
fn compose_tensor_mirror() {
    let id = unknot_string();
    let two = compose(&id, &id).unwrap();
    assert_eq!(two.height(), 2);
    let wide = tensor(&id, &id).unwrap();
    assert_eq!(wide.top().len(), 2);
    assert_eq!(wide.height(), 1);
    let t = trefoil_plus_string();
    assert_eq!(compose(&t, &id).unwrap().height(), t.height() + 1);
    assert_eq!(t.mirror(), trefoil_minus_string());
    assert_eq!(t.mirror().mirror(), t);
    assert_eq!(id.mirror(), id);
    assert_eq!(tensor(&t, &id).unwrap().writhe(), 3);
    assert_eq!(t.mirror().writhe(), -3);
    let cap = SlicedDiagram::parse("top: v ^\ncap>\n").unwrap();
    assert!(compose(&cap, &id).is_err());
    // padding a short closed-bottom diagram needs an empty column
    let padded = tensor(&cap, &t).unwrap();
    assert_eq!(padded.height(), t.height());
}

#[test]
fn trefoil_shapes() {
    let t = trefoil_plus_string();
    assert_eq!((t.count(Generator::XPlus), t.count(Generator::XMinus)), (3, 0));
    let c = closure(&t).unwrap();
    assert!(c.is_closed());
    let ai = arc_index(&c);
    assert_eq!(ai.n_arcs(), 3);
    assert_eq!(ai.crossing_arcs(), 3);
    assert_eq!(arc_index(&closure(&figure_eight_string()).unwrap()).n_arcs(), 4);
    let u = closure(&unknot_string()).unwrap();
    assert!(u.count(Generator::CupRL) + u.count(Generator::CapLR) > 0);
    assert_eq!(u.writhe(), 0);
    assert!(closure(&tensor(&t, &t).unwrap()).is_err());
}

#[test]
fn single_crossing_has_three_arcs() {
    for tok in ["x+", "x-"] {
        let d = SlicedDiagram::parse(&format!("top: v v\n{tok}\n")).unwrap();
        let ai = arc_index(&d);
        assert_eq!(ai.n_arcs(), 3);
        let c = ai.crossings()[0];
        assert_ne!(c.under_in, c.under_out);
        assert_ne!(c.over, c.under_in);
    }
}

#[test]
fn move_fixture_signatures_agree() {
    let fx = move_fixtures();
    for m in &fx {
        assert_eq!(m.lhs.top(), m.rhs.top(), "{}", m.label);
        assert_eq!(m.lhs.bottom(), m.rhs.bottom(), "{}", m.label);
    }
    for id in MoveId::ALL {
        assert!(fx.iter().any(|m| m.id == id), "{id}");
    }
    assert_eq!(fx.iter().filter(|m| m.id.in_unframed_set()).count(), 15);
    assert_eq!(fx.iter().filter(|m| m.id.in_framed_set()).count(), 15);
}

#[test]
fn normalization_keeps_one_generator_per_slice() {
    for d in [figure_eight_string(), closure(&trefoil_plus_string()).unwrap()] {
        let n = d.normalized();
        assert!(n.slices().iter().all(|s| s.pieces.iter().filter(|g| !g.is_identity()).count() == 1));
        assert_eq!(n.top(), d.top());
        assert_eq!(n.bottom(), d.bottom());
        assert_eq!(n.writhe(), d.writhe());
    }
}
