#!/usr/bin/env python3
"""Regenerate the fixture corpora under fixtures/corpus_arxiv and
fixtures/corpus_wikipedia.

The files are committed; this script exists so they can be rebuilt or
extended deterministically.  Twenty plain-text arXiv-style documents are
grouped into five subject directories; eight Wikipedia-style pages carry
HTML markup around the same kind of Presentation MathML.
"""

from __future__ import annotations

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
ARXIV = ROOT / "fixtures" / "corpus_arxiv"
WIKIPEDIA = ROOT / "fixtures" / "corpus_wikipedia"

# MathML for each formula, keyed by its serialized token string.
M = {
    "E = m c ^ 2":
        "<math><mi>E</mi><mo>=</mo><mi>m</mi><msup><mi>c</mi><mn>2</mn></msup></math>",
    "v = s / t":
        "<math><mi>v</mi><mo>=</mo><mfrac><mi>s</mi><mi>t</mi></mfrac></math>",
    "p = m v":
        "<math><mi>p</mi><mo>=</mo><mi>m</mi><mi>v</mi></math>",
    "F = m a":
        "<math><mi>F</mi><mo>=</mo><mi>m</mi><mi>a</mi></math>",
    "ω = 2 π f":
        "<math><mi>ω</mi><mo>=</mo><mn>2</mn><mi>π</mi><mi>f</mi></math>",
    "t = 0":
        "<math><mi>t</mi><mo>=</mo><mn>0</mn></math>",
    "T = 1 / 2 m v ^ 2":
        "<math><mi>T</mi><mo>=</mo><mfrac><mn>1</mn><mn>2</mn></mfrac>"
        "<mi>m</mi><msup><mi>v</mi><mn>2</mn></msup></math>",
    "a _ c = v ^ 2 / r":
        "<math><msub><mi>a</mi><mi>c</mi></msub><mo>=</mo>"
        "<mfrac><msup><mi>v</mi><mn>2</mn></msup><mi>r</mi></mfrac></math>",
    "E = h f":
        "<math><mi>E</mi><mo>=</mo><mi>h</mi><mi>f</mi></math>",
    "λ = h / p":
        "<math><mi>λ</mi><mo>=</mo><mfrac><mi>h</mi><mi>p</mi></mfrac></math>",
    "W = h f - E":
        "<math><mi>W</mi><mo>=</mo><mi>h</mi><mi>f</mi><mo>-</mo><mi>E</mi></math>",
    "T = 1 / f":
        "<math><mi>T</mi><mo>=</mo><mfrac><mn>1</mn><mi>f</mi></mfrac></math>",
    "v = √ ( 2 G M / r )":
        "<math><mi>v</mi><mo>=</mo><msqrt><mfrac><mrow><mn>2</mn><mi>G</mi>"
        "<mi>M</mi></mrow><mi>r</mi></mfrac></msqrt></math>",
    "v = √ ( G M / r )":
        "<math><mi>v</mi><mo>=</mo><msqrt><mfrac><mrow><mi>G</mi><mi>M</mi>"
        "</mrow><mi>r</mi></mfrac></msqrt></math>",
    "r = 2 G M / c ^ 2":
        "<math><mi>r</mi><mo>=</mo><mfrac><mrow><mn>2</mn><mi>G</mi><mi>M</mi>"
        "</mrow><msup><mi>c</mi><mn>2</mn></msup></mfrac></math>",
    "g = G M / r ^ 2":
        "<math><mi>g</mi><mo>=</mo><mfrac><mrow><mi>G</mi><mi>M</mi></mrow>"
        "<msup><mi>r</mi><mn>2</mn></msup></mfrac></math>",
    "F = G m M / r ^ 2":
        "<math><mi>F</mi><mo>=</mo><mi>G</mi><mfrac><mrow><mi>m</mi><mi>M</mi>"
        "</mrow><msup><mi>r</mi><mn>2</mn></msup></mfrac></math>",
    "T = 2 π √ ( a ^ 3 / G M )":
        "<math><mi>T</mi><mo>=</mo><mn>2</mn><mi>π</mi><msqrt><mfrac>"
        "<msup><mi>a</mi><mn>3</mn></msup><mrow><mi>G</mi><mi>M</mi></mrow>"
        "</mfrac></msqrt></math>",
    "x = A cos ( ω t )":
        "<math><mi>x</mi><mo>=</mo><mi>A</mi><mi>cos</mi><mo>(</mo>"
        "<mi>ω</mi><mi>t</mi><mo>)</mo></math>",
    "V = I R":
        "<math><mi>V</mi><mo>=</mo><mi>I</mi><mi>R</mi></math>",
    "P = V I":
        "<math><mi>P</mi><mo>=</mo><mi>V</mi><mi>I</mi></math>",
    "p = F / A":
        "<math><mi>p</mi><mo>=</mo><mfrac><mi>F</mi><mi>A</mi></mfrac></math>",
    "ρ = m / V":
        "<math><mi>ρ</mi><mo>=</mo><mfrac><mi>m</mi><mi>V</mi></mfrac></math>",
    "W = m g":
        "<math><mi>W</mi><mo>=</mo><mi>m</mi><mi>g</mi></math>",
}

ARXIV_DOCS = {
    # -------------------------------------------------- astro-ph
    "astro-ph/0801.0001.txt": f"""Escape and orbital motion in Newtonian gravity

A test body leaves a gravitating source for good once its velocity at
distance r from the center reaches the escape value {M['v = √ ( 2 G M / r )']},
where G is the gravitational constant, M the mass of the source, and r
the radius of the starting orbit.  The escape velocity falls off with
the square root of the distance.

For a circular orbit the required orbital speed is smaller,
{M['v = √ ( G M / r )']}.  Comparing the two expressions shows that the
escape velocity exceeds the circular orbital velocity by a factor of the
square root of two, independent of the mass M or the radius r.
""",
    "astro-ph/0801.0002.txt": f"""Compact objects and the Schwarzschild radius

A mass M collapses to a black hole once it fits inside its Schwarzschild
radius {M['r = 2 G M / c ^ 2']}, with G the gravitational constant and c
the speed of light.  The radius grows linearly with the mass, so the
mean density of the horizon region drops for heavier objects.

Because the speed of light c is so large, the Schwarzschild radius of a
stellar mass is of the order of kilometers.  The radius r sets the scale
below which the escape velocity formally exceeds the speed of light.
""",
    "astro-ph/0801.0003.txt": f"""Kepler's third law for bound orbits

The orbital period of a body circling a mass M on an ellipse with
semi-major axis a follows {M['T = 2 π √ ( a ^ 3 / G M )']}.  The period T
depends on the axis a and on the product of the gravitational constant G
with the central mass, but not on the eccentricity of the orbit.

Doubling the semi-major axis lengthens the period by a factor of about
2.8.  Measuring the period T of a satellite therefore weighs the central
mass directly.
""",
    "astro-ph/0801.0004.txt": f"""Surface gravity of planets and stars

At the surface of a body of mass M and radius r the gravitational
acceleration is {M['g = G M / r ^ 2']}.  The acceleration g is what a
resting observer experiences as weight; a mass m resting on the surface
presses down with the weight {M['W = m g']}.

Newton's law of universal gravitation gives the attraction between two
masses m and M at distance r as {M['F = G m M / r ^ 2']}, and the surface
acceleration is simply this gravitational force per unit mass at the
fixed radius r of the body.
""",
    # -------------------------------------------------- gr-qc
    "gr-qc/0802.0001.txt": f"""Mass-energy equivalence in special relativity

The rest energy of a body is proportional to its mass,
{M['E = m c ^ 2']}, where E is the energy, m the mass, and c the speed of
light.  The equivalence of energy and mass means that any change of the
internal energy shows up as a change of the inertial mass.

Momentum behaves classically at small speeds: a mass m moving with
velocity v carries the momentum {M['p = m v']}.  Only the energy relation
mixes the mass with the constant speed of light c.
""",
    "gr-qc/0802.0002.txt": f"""Energy, mass and momentum of free particles

For a particle at rest the total energy reduces to the rest energy
{M['E = m c ^ 2']}; the mass m and the speed of light c fix the energy E
completely.  The mass-energy equivalence is the best known statement of
relativistic dynamics.

At small velocity the momentum is {M['p = m v']} with v the velocity of
the particle, and the kinetic part of the energy follows the classical
expression {M['T = 1 / 2 m v ^ 2']} in the mass m and the velocity v.
""",
    "gr-qc/0802.0003.txt": f"""Kinetic energy of slow particles

The kinetic energy of a mass m moving with velocity v is
{M['T = 1 / 2 m v ^ 2']}.  The energy T grows with the square of the
velocity, so doubling the velocity quadruples the kinetic energy while
the momentum {M['p = m v']} merely doubles.

The kinetic energy vanishes at the time t of release, {M['t = 0']}, when
the velocity v of the body is still zero.
""",
    "gr-qc/0802.0004.txt": f"""Forces and circular motion

Newton's second law ties the force F on a body of mass m to its
acceleration a through {M['F = m a']}.  On a circular path of radius r
traversed with velocity v the body undergoes the centripetal
acceleration {M['a _ c = v ^ 2 / r']} pointing at the center.

Releasing the body at the time {M['t = 0']} removes the force; from that
time on the acceleration vanishes and the velocity stays constant.
""",
    # -------------------------------------------------- hep-th
    "hep-th/0803.0001.txt": f"""Photon energy and frequency

A photon of frequency f carries the energy {M['E = h f']}, where h is
the Planck constant.  The energy E is strictly proportional to the
frequency f; the constant h converts between the two.

Since the frequency is the inverse of the period, {M['T = 1 / f']}, the
photon energy can equally be written through the period T of the wave.
""",
    "hep-th/0803.0002.txt": f"""Matter waves

Every particle of momentum p is associated with the wavelength
{M['λ = h / p']}, where h is again the Planck constant.  The wavelength
λ shrinks as the momentum grows, which is why heavy or fast particles
behave classically.

With the momentum expressed through mass and velocity as
{M['p = m v']}, the wavelength of a slow electron is comfortably larger
than the atomic scale.
""",
    "hep-th/0803.0003.txt": f"""The photoelectric effect

Light of frequency f ejects electrons from a metal with the maximal
kinetic energy {M['W = h f - E']}, where h is the Planck constant and E
the binding energy of the surface; W is the work the photon performs on
the electron beyond that binding energy.

No electrons appear below the threshold frequency, however intense the
light: the photon energy {M['E = h f']} must first cover the binding
energy of the metal.
""",
    "hep-th/0803.0004.txt": f"""Angular frequency conventions

Oscillatory phenomena are described either by the frequency f or by the
angular frequency {M['ω = 2 π f']}.  The angular frequency ω counts
radians per unit time, the frequency f counts full cycles, and the
period follows from either through {M['T = 1 / f']}.

Choosing ω over f merely moves factors of 2 π around; the period T and
the frequency f remain the observable quantities.
""",
    # -------------------------------------------------- physics
    "physics/0804.0001.txt": f"""Speed, distance and time

The speed of a uniformly moving body is the distance covered per unit
time, {M['v = s / t']}, where s is the distance and t the duration of
the motion.  The velocity v stays constant when both the distance s and
the time t scale together.

Starting the clock at the time {M['t = 0']} makes the elapsed time equal
to the reading of the clock, so the velocity is read off directly.  At
the initial time {M['t = 0']} the covered distance s also vanishes.
""",
    "physics/0804.0002.txt": f"""Momentum and force in one dimension

A body of mass m moving with velocity v carries the momentum
{M['p = m v']}.  A constant force F changes that momentum; by Newton's
second law {M['F = m a']}, the force equals the mass times the
acceleration a of the body.

The velocity grows linearly in time under a constant force, starting
from rest at the time {M['t = 0']}.  The momentum p therefore grows
linearly in the time as well.
""",
    "physics/0804.0003.txt": f"""Pressure and density of simple media

The pressure on a wall is the normal force per unit area,
{M['p = F / A']}, with F the force and A the area.  The density of a
homogeneous body is its mass per unit volume, {M['ρ = m / V']}, with m
the mass and V the volume.

Both the pressure p and the density ρ are intensive: cutting the body
in half changes neither the force per area nor the mass per volume.
""",
    "physics/0804.0004.txt": f"""Elementary circuit relations

Ohm's law ties the voltage V across a resistor to the current I through
it, {M['V = I R']}, where R is the resistance.  The dissipated power is
the product of voltage and current, {M['P = V I']}.

Combining the two relations expresses the power P through any two of
the voltage V, the current I and the resistance R.
""",
    # -------------------------------------------------- quant-ph
    "quant-ph/0805.0001.txt": f"""The harmonic oscillator

A harmonic oscillator of frequency f oscillates with the angular
frequency {M['ω = 2 π f']}.  Its displacement follows
{M['x = A cos ( ω t )']}, where A is the amplitude, ω the angular
frequency of the oscillator, and t the time.

The oscillator returns to the amplitude A whenever the harmonic phase
ω t passes a multiple of 2 π, that is once per period starting from the
time {M['t = 0']}.
""",
    "quant-ph/0805.0002.txt": f"""Quanta of radiation

Planck resolved the blackbody puzzle by quantizing the energy exchanged
at frequency f in units of {M['E = h f']}.  The constant h is the
Planck constant; the energy E of a single quantum is fixed by the
frequency f alone.

The same relation rules absorption: a mode of the field can only accept
the energy {M['E = h f']} or an integer multiple of it.
""",
    "quant-ph/0805.0003.txt": f"""Wavelength of material particles

The wavelength of a particle of momentum p is {M['λ = h / p']}.  The
Planck constant h converts the momentum p into the wavelength λ exactly
as for photons.

For a bullet the momentum {M['p = m v']} of mass m and velocity v makes
the wavelength immeasurably small, while for electrons it reaches the
crystal scale.
""",
    "quant-ph/0805.0004.txt": f"""Energy bookkeeping

Whatever the process, the energy budget must close.  The rest energy
{M['E = m c ^ 2']} of the mass m sets the largest reservoir; the speed
of light c squared makes even a small mass an enormous energy.

Slow motion adds the kinetic energy {M['T = 1 / 2 m v ^ 2']} of the
velocity v on top of the rest energy of the mass m.
""",
}

WIKIPEDIA_DOCS = {
    "classical-mechanics/Acceleration.html": f"""<!doctype html>
<html><head><title>Acceleration</title></head><body>
<h1>Acceleration</h1>
<p>Acceleration is the rate at which the velocity of a body changes with
time.  For uniform acceleration from rest, Newton's second law
{M['F = m a']} relates the net force F, the mass m and the acceleration
a of the body.</p>
<p>On a circular path of radius r the centripetal acceleration is
{M['a _ c = v ^ 2 / r']}, where v is the velocity along the path.  The
acceleration points at the center at every time t.</p>
</body></html>
""",
    "classical-mechanics/Velocity.html": f"""<!doctype html>
<html><head><title>Velocity</title></head><body>
<h1>Velocity</h1>
<p>The velocity of a body is the distance it covers per unit of time.
For uniform motion the speed obeys {M['v = s / t']}, with s the distance
and t the duration of travel.  The velocity v is measured in meters per
second.</p>
<p>A body released at the time {M['t = 0']} with no force on it keeps
its velocity; its momentum {M['p = m v']} with the mass m is likewise
conserved over time.</p>
</body></html>
""",
    "classical-mechanics/Momentum.html": f"""<!doctype html>
<html><head><title>Momentum</title></head><body>
<h1>Momentum</h1>
<p>The momentum of a body is the product of its mass and its velocity,
{M['p = m v']}.  Momentum is conserved in collisions, which makes the
mass m times the velocity v the bookkeeping quantity of mechanics.</p>
<p>A force changes momentum at the rate given by {M['F = m a']}; over
the time t a constant force transfers the momentum F t.</p>
</body></html>
""",
    "classical-mechanics/Force.html": f"""<!doctype html>
<html><head><title>Force</title></head><body>
<h1>Force</h1>
<p>A force accelerates the mass it acts on according to Newton's second
law {M['F = m a']}.  The force F and the acceleration a are parallel,
and the mass m measures the inertia of the body.</p>
<p>Between two masses m and M at distance r acts the gravitational
force {M['F = G m M / r ^ 2']}, with G the gravitational constant.  The
weight of a body near the surface is {M['W = m g']} with g the local
gravitational acceleration.</p>
</body></html>
""",
    "classical-mechanics/Kinetic_energy.html": f"""<!doctype html>
<html><head><title>Kinetic energy</title></head><body>
<h1>Kinetic energy</h1>
<p>The kinetic energy of a mass m moving with velocity v is
{M['T = 1 / 2 m v ^ 2']}.  The energy grows quadratically with the
velocity, so braking from twice the velocity takes four times the
energy.</p>
<p>At the time {M['t = 0']} of release from rest the kinetic energy
vanishes; the work of the force then feeds energy into the motion over
time.</p>
</body></html>
""",
    "classical-mechanics/Mass_energy_equivalence.html": f"""<!doctype html>
<html><head><title>Mass-energy equivalence</title></head><body>
<h1>Mass-energy equivalence</h1>
<p>Mass and energy are two faces of the same conserved quantity.  The
rest energy of a body of mass m is {M['E = m c ^ 2']}, where c is the
speed of light.  The equivalence of energy and mass turns mass balances
into energy balances.</p>
<p>Because the speed of light c is large, a gram of mass stores an
enormous energy E.  Nuclear binding converts a measurable fraction of
the mass into released energy.</p>
</body></html>
""",
    "classical-mechanics/Pressure.html": f"""<!doctype html>
<html><head><title>Pressure</title></head><body>
<h1>Pressure</h1>
<p>Pressure is the force applied per unit area, {M['p = F / A']}, with
F the normal force and A the area it acts on.  The density of the
pressing medium is {M['ρ = m / V']} for a mass m filling the volume
V.</p>
<p>Hydrostatic pressure grows with depth because the weight
{M['W = m g']} of the fluid column above presses on the area below.</p>
</body></html>
""",
    "classical-mechanics/Angular_frequency.html": f"""<!doctype html>
<html><head><title>Angular frequency</title></head><body>
<h1>Angular frequency</h1>
<p>The angular frequency of an oscillation of frequency f is
{M['ω = 2 π f']}; it measures the phase advance per unit time.  The
period of the oscillation is the inverse of the frequency,
{M['T = 1 / f']}.</p>
<p>A harmonic oscillator displaced by {M['x = A cos ( ω t )']} with
amplitude A passes its rest position twice per period, whatever the
time t of observation.</p>
</body></html>
""",
}


def write_tree(base, docs):
    for rel, body in sorted(docs.items()):
        path = base / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(body, "utf-8")
    return len(docs)


def main():
    n_arxiv = write_tree(ARXIV, ARXIV_DOCS)
    n_wiki = write_tree(WIKIPEDIA, WIKIPEDIA_DOCS)
    assert n_arxiv == 20, f"arXiv corpus must hold exactly 20 documents, got {n_arxiv}"
    print(f"wrote {n_arxiv} arXiv documents under {ARXIV}")
    print(f"wrote {n_wiki} Wikipedia documents under {WIKIPEDIA}")


if __name__ == "__main__":
    main()
