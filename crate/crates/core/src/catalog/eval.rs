use super::context::{At, EvaluationContext, Key, Src};
use super::{EvalError, Value};
use crate::geometry::{Point, Polygon};
use crate::scalar::Real;

use At::{Steiner, F1, F2, M};
use Src::{Inner, Orbit, Outer};

fn sum<T: Real>(xs: impl IntoIterator<Item = T>) -> T {
    xs.into_iter().fold(T::zero(), |a, x| a + x)
}

fn prod<T: Real>(xs: impl IntoIterator<Item = T>) -> T {
    xs.into_iter().fold(T::one(), |a, x| a * x)
}

/// Angle at `m` subtended by consecutive vertices of `q`.
fn angles_about<T: Real>(q: &Polygon<T>, m: Point<T>) -> Vec<T> {
    (0..q.len())
        .map(|i| {
            let (u, v) = (q.vertex(i) - m, q.vertex(i + 1) - m);
            u.cross(v).abs().atan2(u.dot(v))
        })
        .collect()
}

fn distances<T: Real>(q: &Polygon<T>, m: Point<T>) -> Vec<T> {
    q.vertices().iter().map(|&v| v.distance(m)).collect()
}

fn scalar<T>(v: T) -> Result<Value<T>, EvalError> {
    Ok(Value::Scalar(v))
}

pub(super) fn evaluate_row<T: Real>(
    id: &str,
    ctx: &EvaluationContext<'_, T>,
) -> Result<Value<T>, EvalError> {
    let c = ctx;
    let area = |k: Key| c.area(k);
    let base = |s: Src| c.area(Key::Base(s));
    let ped = |s: Src, at: At| c.area(Key::Pedal(s, at));
    let anti = |s: Src, at: At| c.area(Key::Antipedal(s, at));
    let inv = |s: Src, at: At| c.area(Key::Inversive(s, at));
    let pair_ratio = |k1: Key, k2: Key| c.ratio(area(k1)?, area(k2)?);
    let m = || c.anchor.map(|a| a.position).ok_or(EvalError::MissingAnchor);
    let (f1, f2) = c.foci();

    match id {
        // cluster 1
        "k101" => scalar(sum(c.orbit().internal_angles()?.into_iter().map(T::cos))),
        "k102" => scalar(prod(c.outer()?.internal_angles()?.into_iter().map(T::cos))),
        "k103" => scalar(c.ratio(base(Outer)?, base(Orbit)?)?),
        "k104" => scalar(sum(c
            .outer()?
            .internal_angles()?
            .into_iter()
            .map(|t| (T::two() * t).cos()))),
        "k105" => scalar(sin_half_product(c)?),
        "k106" => scalar(base(Outer)? * base(Orbit)?),
        "k107" => scalar(c.ratio(base(Outer)?, base(Orbit)?)? * sin_half_product(c)?),
        "k108" => {
            let s = sin_half_product(c)?;
            scalar(c.ratio(c.ratio(base(Outer)?, base(Orbit)?)?, s)?)
        }
        "k109" => scalar(c.ratio(base(Orbit)?, base(Inner)?)?),
        "k110" => scalar(base(Orbit)? * base(Inner)?),
        "k111" => scalar(base(Outer)? * base(Inner)?),
        "k112" => {
            let a = base(Orbit)?;
            scalar(c.ratio(base(Outer)? * base(Inner)?, a * a)?)
        }
        "k113" => scalar(c.ratio(base(Outer)?, base(Inner)?)?),
        "k114" => scalar(prod(c.focal_distances(1))),
        "k115" => scalar(prod(distances(c.outer()?, f1))),
        "k116" => {
            let (l, r) = tangent_splits(c);
            scalar(c.ratio(prod(l), prod(r))?)
        }
        "k117" => {
            let (l, r) = tangent_splits(c);
            Ok(Value::Vector(vec![prod(l), prod(r)]))
        }
        "k118" => {
            let (l, r) = tangent_splits(c);
            Ok(Value::Vector(vec![sum(l), sum(r)]))
        }
        "k119" => {
            let e = &c.family.billiard;
            let p = T::lit(2.0 / 3.0);
            let mut s = T::zero();
            for &v in c.orbit().vertices() {
                s += e.curvature(v)?.powf(p);
            }
            scalar(s)
        }
        "k120" => scalar(sum(c.focal_angles(1).into_iter().map(T::cos))),
        "k121" => scalar(sum(c.focal_distances(1))),

        // cluster 2
        "k201" => Ok(Value::Radii(distances(
            &c.poly(Key::Pedal(Orbit, M))?,
            Point::origin(),
        ))),
        "k202a" | "k202b" => scalar(prod(distances(&c.poly(Key::Pedal(Orbit, M))?, m()?))),
        "k203a" | "k203b" => scalar(base(Orbit)? * ped(Orbit, M)?),
        "k204" => scalar(c.ratio(base(Orbit)?, ped(Orbit, M)?)?),
        "k205" => scalar(sum(angles_about(&c.poly(Key::Pedal(Orbit, M))?, m()?)
            .into_iter()
            .map(T::cos))),

        // cluster 3
        "k301" => Ok(Value::Radii(distances(
            &c.poly(Key::Pedal(Outer, M))?,
            Point::origin(),
        ))),
        "k302" => {
            let mm = m()?;
            let q = c.poly(Key::Pedal(Outer, M))?;
            scalar(sum(q.vertices().iter().map(|&v| (v - mm).norm_sq())))
        }
        "k303a" | "k303b" => scalar(base(Outer)? * ped(Outer, M)?),
        "k304" => scalar(c.ratio(base(Outer)?, ped(Outer, M)?)?),
        "k305" => scalar(prod(
            angles_about(&c.poly(Key::Pedal(Outer, M))?, m()?)
                .into_iter()
                .map(T::cos),
        )),
        "k306" => Ok(Value::Point(
            c.poly(Key::Pedal(Outer, M))?.vertex_centroid(),
        )),
        "k307" => Ok(Value::Point(c.poly(Key::Pedal(Outer, M))?.area_centroid()?)),

        // cluster 4
        "k401" => scalar(base(Outer)? * anti(Orbit, M)?),
        "k402" => scalar(c.ratio(base(Outer)?, anti(Orbit, M)?)?),
        "k403a" | "k403b" => scalar(ped(Orbit, M)? * anti(Orbit, M)?),
        "k404" => scalar(c.ratio(anti(Orbit, M)?, ped(Orbit, M)?)?),
        "k405" => Ok(Value::Point(
            c.poly(Key::Antipedal(Orbit, M))?.vertex_centroid(),
        )),
        "k406a" | "k406b" => {
            let q = c.poly(Key::Antipedal(Outer, M))?;
            let (c0, c2) = (q.vertex_centroid(), q.area_centroid()?);
            Ok(Value::Vector(vec![c0.x, c0.y, c2.x, c2.y]))
        }
        "k407" => Ok(Value::Point(
            c.poly(Key::Antipedal(Outer, M))?.vertex_centroid(),
        )),

        // cluster 5
        "k501" => scalar(c.ratio(base(Orbit)?, ped(Orbit, Steiner)?)?),
        "k502" => scalar(c.ratio(base(Outer)?, ped(Outer, Steiner)?)?),
        "k503" => scalar(c.ratio(base(Inner)?, ped(Inner, Steiner)?)?),

        // cluster 6
        "k601" => {
            let q1 = distances(&c.poly(Key::Pedal(Orbit, F1))?, f1);
            let q2 = distances(&c.poly(Key::Pedal(Orbit, F2))?, f2);
            scalar(sum(q1) * sum(q2))
        }
        "k602" => {
            let q1 = distances(&c.poly(Key::Pedal(Orbit, F1))?, f1);
            let q2 = distances(&c.poly(Key::Pedal(Orbit, F2))?, f2);
            scalar(prod(q1) * prod(q2))
        }
        "k603" => {
            let q1 = distances(&c.poly(Key::Antipedal(Orbit, F1))?, f1);
            let q2 = distances(&c.poly(Key::Antipedal(Orbit, F2))?, f2);
            scalar(c.ratio(sum(q1), sum(q2))?)
        }
        "k604a" => scalar(ped(Orbit, F1)? * ped(Orbit, F2)?),
        "k604b" => scalar(pair_ratio(Key::Pedal(Orbit, F1), Key::Pedal(Orbit, F2))?),
        "k605a" => scalar(ped(Outer, F1)? * ped(Outer, F2)?),
        "k605b" => scalar(pair_ratio(Key::Pedal(Outer, F1), Key::Pedal(Outer, F2))?),
        "k606" => {
            let r = pair_ratio(Key::Pedal(Orbit, F1), Key::Pedal(Orbit, F2))?;
            let rp = pair_ratio(Key::Pedal(Outer, F1), Key::Pedal(Outer, F2))?;
            scalar(c.ratio(r, rp)?)
        }
        "k607" => scalar(pair_ratio(
            Key::Antipedal(Orbit, F1),
            Key::Antipedal(Orbit, F2),
        )?),
        "k608" => scalar(pair_ratio(
            Key::Antipedal(Outer, F1),
            Key::Antipedal(Outer, F2),
        )?),
        "k609" => scalar(pair_ratio(Key::Pedal(Inner, F1), Key::Pedal(Inner, F2))?),
        "k610" => scalar(pair_ratio(
            Key::Antipedal(Inner, F1),
            Key::Antipedal(Inner, F2),
        )?),

        // cluster 7
        "k701" => scalar(c.ratio(base(Orbit)?, area(Key::Evolute(Orbit))?)?),
        "k702" => scalar(c.ratio(base(Outer)?, area(Key::Evolute(Outer))?)?),
        "k703" => scalar(c.ratio(base(Inner)?, area(Key::Evolute(Inner))?)?),

        // cluster 8
        "k801" => scalar(sum(c.focal_distances(1).into_iter().map(T::recip))),
        "k802" => scalar(c.poly(Key::Inversive(Orbit, F1))?.perimeter()),
        "k803" => scalar(sum(c
            .poly(Key::Inversive(Orbit, F1))?
            .internal_angles()?
            .into_iter()
            .map(T::cos))),
        "k804a" | "k804b" => scalar(base(Orbit)? * inv(Orbit, F1)?),
        "k805" => scalar(c.ratio(base(Orbit)?, inv(Orbit, F1)?)?),
        "k806a" | "k806b" => scalar(c.ratio(inv(Outer, F1)?, inv(Orbit, F1)?)?),
        "k807" => scalar(base(Orbit)? * area(Key::EllipseInverse(Orbit))?),
        "k808" => scalar(c.ratio(base(Orbit)?, area(Key::EllipseInverse(Orbit))?)?),
        "k809" => scalar(base(Outer)? * area(Key::EllipseInverse(Outer))?),
        "k810" => scalar(c.ratio(base(Outer)?, area(Key::EllipseInverse(Outer))?)?),
        "k811" => scalar(sum(c
            .poly(Key::Dual(F1))?
            .side_lengths()
            .into_iter()
            .map(T::sq))),
        "k812a" | "k812b" => scalar(sum(c
            .poly(Key::Polar(F1))?
            .internal_angles()?
            .into_iter()
            .map(T::cos))),
        "k813" => scalar(c.ratio(area(Key::Polar(F1))?, inv(Orbit, F1)?)?),
        "k814" => scalar(c.ratio(area(Key::Polar(F1))?, area(Key::Dual(F1))?)?),
        "k815" => scalar(ped(Orbit, F1)? * area(Key::Dual(F1))?),
        "k816" => scalar(c.ratio(ped(Orbit, F1)?, area(Key::Dual(F1))?)?),
        "k817" => scalar(inv(Orbit, F1)? * anti(Orbit, F1)?),
        "k818" => scalar(c.ratio(inv(Orbit, F1)?, anti(Orbit, F1)?)?),

        // cluster 9
        "k901" => {
            let s1 = sum(c.focal_distances(1).into_iter().map(T::recip));
            let s2 = sum(c.focal_distances(2).into_iter().map(T::recip));
            scalar(s1 / s2)
        }
        "k902" => {
            let d = c.focal_distances(1).into_iter().zip(c.focal_distances(2));
            scalar(sum(d.map(|(x, y)| (x * y).recip())))
        }
        "k903a" => scalar(inv(Orbit, F1)? * inv(Orbit, F2)?),
        "k903b" => scalar(pair_ratio(
            Key::Inversive(Orbit, F1),
            Key::Inversive(Orbit, F2),
        )?),
        "k904a" => scalar(inv(Outer, F1)? * inv(Outer, F2)?),
        "k904b" => scalar(pair_ratio(
            Key::Inversive(Outer, F1),
            Key::Inversive(Outer, F2),
        )?),
        "k905" => scalar(pair_ratio(
            Key::Inversive(Inner, F1),
            Key::Inversive(Inner, F2),
        )?),
        "k906" => scalar(pair_ratio(
            Key::Inversive(Outer, At::LocusF1),
            Key::Inversive(Outer, At::LocusF2),
        )?),
        "k907a" => scalar(area(Key::Dual(F1))? * area(Key::Dual(F2))?),
        "k907b" => scalar(pair_ratio(Key::Dual(F1), Key::Dual(F2))?),
        "k908a" | "k908b" => scalar(pair_ratio(
            Key::InversivePedal(F1),
            Key::InversivePedal(F2),
        )?),

        other => Err(EvalError::UnknownId(other.to_string())),
    }
}

fn sin_half_product<T: Real>(c: &EvaluationContext<'_, T>) -> Result<T, EvalError> {
    Ok(prod(
        c.orbit()
            .internal_angles()?
            .into_iter()
            .map(|t| (t * T::half()).sin()),
    ))
}

/// `lᵢ = |P″ᵢ − Pᵢ|`, `rᵢ = |Pᵢ₊₁ − P″ᵢ|`: the two pieces of side `i` cut by
/// its caustic contact point.
fn tangent_splits<T: Real>(c: &EvaluationContext<'_, T>) -> (Vec<T>, Vec<T>) {
    let (p, q) = (c.orbit(), c.inner());
    (0..p.len())
        .map(|i| {
            (
                q.vertex(i).distance(p.vertex(i)),
                p.vertex(i + 1).distance(q.vertex(i)),
            )
        })
        .unzip()
}
