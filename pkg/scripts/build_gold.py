#!/usr/bin/env python3
"""Regenerate fixtures/gold/benchmark.tsv.

Sixty-five physics concepts in alphabetical order, gold ids 310-374.
Annotations name the identifiers of each formula (symbol=name@item);
synonym groups list the alternatives a judge accepts as relevant for
one query slot (an annotation symbol, an annotation name, or the
formula itself).
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from mathqa.corpus import GOLD_HEADER, load_gold_benchmark  # noqa: E402

OUT = ROOT / "fixtures" / "gold" / "benchmark.tsv"

# gold_id, item, concept name, formula, annotations, synonyms
RECORDS = [
    (310, "Q11376", "acceleration", r"\mathbf{a} = \frac{d\mathbf{v}}{dt}",
     "a=acceleration@Q11376;v=velocity@Q11465;t=time@Q11471",
     "a:g;v:c|u;velocity:speed;time:duration;t:τ"),
    (311, "Q186300", "angular acceleration",
     r"\boldsymbol{\alpha} = \frac{d\boldsymbol{\omega}}{dt}",
     "α=angular acceleration@Q186300;ω=angular velocity@Q161635;t=time@Q11471",
     "angular velocity:frequency|harmonic|oscillator;time:duration"),
    (312, "Q834020", "angular frequency", r"\omega = 2\pi f",
     "ω=angular frequency@Q834020;f=frequency@Q11652",
     "angular frequency:frequency;formula:ω = 2 π f"),
    (313, "Q161254", "angular momentum",
     r"\mathbf{L} = \mathbf{r} \times \mathbf{p}",
     "L=angular momentum@Q161254;r=radius@Q173817;p=momentum@Q41273",
     "angular momentum:momentum;radius:distance"),
    (314, "Q161635", "angular velocity",
     r"\boldsymbol{\omega} = \frac{d\varphi}{dt} \mathbf{u}",
     "ω=angular velocity@Q161635;φ=angle@Q11352;t=time@Q11471",
     "angular velocity:frequency|harmonic|oscillator;time:duration"),
    (315, "Q2945123", "center of mass",
     r"\sum_{i=1}^n m_i (\mathbf{r}_i - \mathbf{R}) = 0",
     "m=mass@Q11423;r=position@Q192234;R=center of mass@Q2945123", ""),
    (316, "Q2248131", "centripetal acceleration", r"a_c = \frac{v^2}{r}",
     "a=centripetal acceleration@Q2248131;v=velocity@Q11465;r=radius@Q173817",
     "centripetal acceleration:acceleration;v:c|u;formula:a _ c = v ^ 2 / r"),
    (317, "Q172881", "centripetal force", r"\vec{F} = -\frac{mv^2}{r} \hat{r}",
     "F=centripetal force@Q172881;m=mass@Q11423;v=velocity@Q11465;"
     "r=radius@Q173817",
     "centripetal force:force"),
    (318, "Q843905", "circumference", r"C = \pi \cdot d = 2\pi \cdot r",
     "C=circumference@Q843905;d=diameter@Q37221;r=radius@Q173817",
     "radius:distance"),
    (319, "Q11382", "conservation of energy",
     r"E_{\text{tot1}} = E_{\text{tot2}}", "E=energy@Q11379", ""),
    (320, "Q2305665", "conservation of momentum",
     r"p_{\text{tot1}} = p_{\text{tot2}}", "p=momentum@Q41273", ""),
    (321, "Q83152", "coulomb's law", r"F = \frac{k Q q}{r^2}",
     "F=force@Q11402;k=coulomb constant@Q1131255;Q=electric charge@Q1111;"
     "q=electric charge@Q1111;r=distance@Q126017",
     "distance:radius"),
    (322, "Q234072", "current density", r"J = \frac{I}{A}",
     "J=current density@Q234072;I=electric current@Q11651;A=area@Q11500",
     "electric current:current"),
    (323, "Q207522", "de broglie wavelength", r"\lambda = \frac{h}{p}",
     "λ=wavelength@Q41364;h=planck constant@Q122894;p=momentum@Q41273",
     "formula:λ = h / p"),
    (324, "Q29539", "density", r"\rho = \frac{m}{V}",
     "ρ=density@Q29539;m=mass@Q11423;V=volume@Q39297",
     "formula:ρ = m / V"),
    (325, "Q867553", "drag equation", r"F = \frac{1}{2} \rho v^2 C A",
     "F=force@Q11402;ρ=density@Q29539;v=velocity@Q11465;"
     "C=drag coefficient@Q1778961;A=area@Q11500",
     "v:c|u"),
    (326, "Q1062022", "elastic potential energy", r"U = \frac{1}{2} k x^2",
     "U=potential energy@Q155710;k=spring constant@Q1569454;"
     "x=displacement@Q190291",
     "potential energy:energy"),
    (327, "Q1111", "electric charge", r"Q = I t",
     "Q=electric charge@Q1111;I=electric current@Q11651;t=time@Q11471",
     "time:duration"),
    (328, "Q46221", "electric field", r"E = \frac{F}{q}",
     "E=electric field@Q46221;F=force@Q11402;q=electric charge@Q1111",
     "electric field:field"),
    (329, "Q206175", "electric power", r"P = V I",
     "P=power@Q25342;V=voltage@Q25428;I=electric current@Q11651",
     "electric current:current"),
    (330, "Q193478", "escape velocity", r"v = \sqrt{\frac{2 G M}{r}}",
     "v=escape velocity@Q193478;G=gravitational constant@Q18373;"
     "M=mass@Q11423;r=radius@Q173817",
     "escape velocity:velocity|speed;formula:v = √ ( 2 G M / r )"),
    (331, "Q11402", "force", r"F = m a",
     "F=force@Q11402;m=mass@Q11423;a=acceleration@Q11376", "a:g"),
    (332, "Q11652", "frequency", r"f = \frac{1}{T}",
     "f=frequency@Q11652;T=period@Q2642727", "period:time"),
    (333, "Q82580", "friction", r"F = \mu N",
     "F=force@Q11402;μ=friction coefficient@Q1932524;"
     "N=normal force@Q1402577",
     "friction coefficient:friction"),
    (334, "Q30006", "gravitational acceleration", r"g = \frac{G M}{r^2}",
     "g=gravitational acceleration@Q30006;G=gravitational constant@Q18373;"
     "M=mass@Q11423;r=radius@Q173817",
     "gravitational acceleration:acceleration|gravity;"
     "formula:g = G M / r ^ 2"),
    (335, "Q588569", "gravitational potential energy", r"U = m g h",
     "U=potential energy@Q155710;m=mass@Q11423;"
     "g=gravitational acceleration@Q30006;h=height@Q208826",
     "potential energy:energy"),
    (336, "Q170282", "hooke's law", r"F = -k x",
     "F=force@Q11402;k=spring constant@Q1569454;x=displacement@Q190291", ""),
    (337, "Q11432", "ideal gas law", r"p V = n R T",
     "p=pressure@Q39552;V=volume@Q39297;n=amount of substance@Q104946;"
     "R=gas constant@Q173432;T=temperature@Q11466", ""),
    (338, "Q837940", "impulse", r"J = F t",
     "J=impulse@Q837940;F=force@Q11402;t=time@Q11471", "time:duration"),
    (339, "Q46276", "kinetic energy", r"E = \frac{1}{2} m v^2",
     "E=kinetic energy@Q46276;m=mass@Q11423;v=velocity@Q11465",
     "kinetic energy:energy;v:c|u;formula:T = 1 / 2 m v ^ 2"),
    (340, "Q172203", "lorentz force",
     r"\mathbf{F} = q \mathbf{E} + q \mathbf{v} \times \mathbf{B}",
     "F=force@Q11402;q=electric charge@Q1111;E=electric field@Q46221;"
     "v=velocity@Q11465;B=magnetic field@Q11408",
     "magnetic field:field"),
    (341, "Q177831", "magnetic flux", r"\Phi = B A \cos \theta",
     "Φ=magnetic flux@Q177831;B=magnetic field@Q11408;A=area@Q11500;"
     "θ=angle@Q11352", ""),
    (342, "Q35875", "mass-energy equivalence", r"E = mc^2",
     "E=energy@Q11379;m=mass@Q11423;c=speed of light@Q2111", ""),
    (343, "Q41273", "momentum", r"p = m v",
     "p=momentum@Q41273;m=mass@Q11423;v=velocity@Q11465",
     "v:c|u;velocity:speed"),
    (344, "Q11412", "newton's law of universal gravitation",
     r"F = G \frac{m M}{r^2}",
     "F=force@Q11402;G=gravitational constant@Q18373;m=mass@Q11423;"
     "M=mass@Q11423;r=distance@Q126017",
     "distance:radius;formula:F = G m M / r ^ 2"),
    (345, "Q2397319", "newton's second law", r"F = m a",
     "F=force@Q11402;m=mass@Q11423;a=acceleration@Q11376", "a:g"),
    (346, "Q41591", "ohm's law", r"V = I R",
     "V=voltage@Q25428;I=electric current@Q11651;R=resistance@Q25358",
     "voltage:potential"),
    (347, "Q37640", "orbital period", r"T = 2\pi \sqrt{\frac{a^3}{G M}}",
     "T=period@Q2642727;a=semi-major axis@Q535925;"
     "G=gravitational constant@Q18373;M=mass@Q11423",
     "period:time;formula:T = 2 π √ ( a ^ 3 / G M )"),
    (348, "Q2066997", "orbital speed", r"v = \sqrt{\frac{G M}{r}}",
     "v=orbital speed@Q2066997;G=gravitational constant@Q18373;"
     "M=mass@Q11423;r=radius@Q173817",
     "orbital speed:speed|velocity;formula:v = √ ( G M / r )"),
    (349, "Q20702", "pendulum", r"T = 2\pi \sqrt{\frac{L}{g}}",
     "T=period@Q2642727;L=length@Q36253;"
     "g=gravitational acceleration@Q30006",
     "period:time"),
    (350, "Q2642727", "period", r"T = \frac{1}{f}",
     "T=period@Q2642727;f=frequency@Q11652",
     "period:time;formula:T = 1 / f"),
    (351, "Q26708069", "photon energy", r"E = h f",
     "E=photon energy@Q26708069;h=planck constant@Q122894;"
     "f=frequency@Q11652",
     "photon energy:energy"),
    (352, "Q25342", "power", r"P = \frac{W}{t}",
     "P=power@Q25342;W=work@Q42213;t=time@Q11471", "time:duration"),
    (353, "Q39552", "pressure", r"p = \frac{F}{A}",
     "p=pressure@Q39552;F=force@Q11402;A=area@Q11500",
     "formula:p = F / A"),
    (354, "Q1202821", "reduced mass", r"\mu = \frac{m M}{m + M}",
     "μ=reduced mass@Q1202821;m=mass@Q11423;M=mass@Q11423",
     "reduced mass:mass"),
    (355, "Q174102", "refractive index", r"n = \frac{c}{v}",
     "n=refractive index@Q174102;c=speed of light@Q2111;"
     "v=velocity@Q11465",
     "v:u"),
    (356, "Q25358", "resistance", r"R = \frac{V}{I}",
     "R=resistance@Q25358;V=voltage@Q25428;I=electric current@Q11651", ""),
    (357, "Q1148215", "rotational kinetic energy",
     r"E = \frac{1}{2} I \omega^2",
     "E=kinetic energy@Q46276;I=moment of inertia@Q165618;"
     "ω=angular velocity@Q161635",
     "kinetic energy:energy"),
    (358, "Q174444", "schwarzschild radius", r"r = \frac{2 G M}{c^2}",
     "r=schwarzschild radius@Q174444;G=gravitational constant@Q18373;"
     "M=mass@Q11423;c=speed of light@Q2111",
     "schwarzschild radius:radius;formula:r = 2 G M / c ^ 2"),
    (359, "Q170475", "simple harmonic motion", r"x = A \cos(\omega t)",
     "x=displacement@Q190291;A=amplitude@Q6138528;"
     "ω=angular frequency@Q834020;t=time@Q11471",
     "time:duration;formula:x = A cos ( ω t )"),
    (360, "Q165145", "snell's law",
     r"\frac{\sin \theta_1}{\sin \theta_2} = \frac{v_1}{v_2}",
     "θ=angle@Q11352;v=velocity@Q11465", "v:u"),
    (361, "Q1129892", "sound intensity", r"I = \frac{P}{A}",
     "I=sound intensity@Q1129892;P=power@Q25342;A=area@Q11500",
     "sound intensity:intensity"),
    (362, "Q487756", "specific heat capacity", r"c = \frac{Q}{m \Delta T}",
     "c=specific heat capacity@Q487756;Q=heat@Q44432;m=mass@Q11423;"
     "T=temperature@Q11466",
     "specific heat capacity:heat capacity"),
    (363, "Q3711325", "speed", r"v = s/t",
     "v=speed@Q3711325;s=distance@Q126017;t=duration@Q2199864",
     "duration:time;v:c|u;speed:velocity"),
    (364, "Q217900", "stefan-boltzmann law", r"j = \sigma T^4",
     "j=radiant exitance@Q1259526;σ=stefan-boltzmann constant@Q1969756;"
     "T=temperature@Q11466", ""),
    (365, "Q1086316", "terminal velocity", r"v = \sqrt{\frac{2 m g}{\rho A C}}",
     "v=terminal velocity@Q1086316;m=mass@Q11423;"
     "g=gravitational acceleration@Q30006;ρ=density@Q29539;A=area@Q11500;"
     "C=drag coefficient@Q1778961",
     "terminal velocity:velocity|speed"),
    (366, "Q670036", "thin lens equation",
     r"\frac{1}{f} = \frac{1}{u} + \frac{1}{v}",
     "f=focal length@Q193540;u=distance@Q126017;v=distance@Q126017", ""),
    (367, "Q48103", "torque", r"\tau = r F \sin \theta",
     "τ=torque@Q48103;r=radius@Q173817;F=force@Q11402;θ=angle@Q11352",
     "radius:distance"),
    (368, "Q11465", "velocity", r"\mathbf{v} = \frac{d\mathbf{x}}{dt}",
     "v=velocity@Q11465;x=position@Q192234;t=time@Q11471",
     "v:c|u;velocity:speed;time:duration"),
    (369, "Q25428", "voltage", r"V = \frac{W}{Q}",
     "V=voltage@Q25428;W=work@Q42213;Q=electric charge@Q1111",
     "voltage:potential"),
    (370, "Q592386", "wave speed", r"v = f \lambda",
     "v=speed@Q3711325;f=frequency@Q11652;λ=wavelength@Q41364", "v:c|u"),
    (371, "Q41364", "wavelength", r"\lambda = \frac{v}{f}",
     "λ=wavelength@Q41364;v=velocity@Q11465;f=frequency@Q11652", ""),
    (372, "Q25288", "weight", r"W = m g",
     "W=weight@Q25288;m=mass@Q11423;"
     "g=gravitational acceleration@Q30006",
     "gravitational acceleration:gravity"),
    (373, "Q783800", "work function", r"W = h f - E",
     "W=work function@Q783800;h=planck constant@Q122894;"
     "f=frequency@Q11652;E=energy@Q11379",
     "work function:work"),
    (374, "Q2091584", "young's modulus", r"E = \frac{\sigma}{\varepsilon}",
     "E=young's modulus@Q2091584;σ=stress@Q180045;ε=strain@Q1056396", ""),
]


def main():
    names = [r[2] for r in RECORDS]
    assert names == sorted(names), "records must stay alphabetical"
    assert len(RECORDS) == 65, len(RECORDS)
    assert [r[0] for r in RECORDS] == list(range(310, 375))

    lines = ["\t".join(GOLD_HEADER)]
    for gold_id, qid, name, formula, annotations, synonyms in RECORDS:
        lines.append("\t".join(
            [str(gold_id), qid, name, formula, annotations, synonyms]
        ))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", "utf-8")

    records = load_gold_benchmark(OUT)  # full validation pass
    assert len(records) == 65
    by_name = {r.concept_name: r.gold_id for r in records}
    assert by_name["speed"] == 363
    assert by_name["mass-energy equivalence"] == 342
    print(f"wrote {len(records)} benchmark records to {OUT}")


if __name__ == "__main__":
    main()
