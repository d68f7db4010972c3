#!/usr/bin/env python3
"""Build diagram fixtures from planar polyline sketches.

Each edge of the spatial graph is a polyline from one vertex to another. Crossing points
must appear as polyline points on both strands; the over strand is named per crossing.
Faces are traced from the planar embedding, so region incidences are never typed by hand.
"""
import json
import math
import sys
from pathlib import Path


def build(edges, vertices, crossings):
    semis = []
    passes = {c: [] for c in crossings}
    for name, pts in edges.items():
        cur = [pts[0]]
        for i in range(1, len(pts)):
            p = pts[i]
            cur.append(p)
            if p in crossings or i == len(pts) - 1:
                d0 = (cur[1][0] - cur[0][0], cur[1][1] - cur[0][1])
                d1 = (cur[-1][0] - cur[-2][0], cur[-1][1] - cur[-2][1])
                semis.append(dict(edge=name, start=cur[0], end=cur[-1], d0=d0, d1=d1))
                if p in crossings:
                    passes[p].append((name, i, len(semis) - 1))
                cur = [p]
    out = []
    for pt, (over_edge, which) in crossings.items():
        ps = passes[pt]
        if len(ps) != 2:
            raise SystemExit(f"crossing {pt} is passed {len(ps)} times")
        cand = [p for p in ps if p[0] == over_edge]
        if which is not None:
            cand = [p for p in cand if p[1] == which]
        if len(cand) != 1:
            raise SystemExit(f"cannot tell the over strand at {pt}")
        ov = cand[0]
        un = ps[0] if ps[1] is ov else ps[1]
        do, du = semis[ov[2]]["d1"], semis[un[2]]["d1"]
        sign = 1 if do[0] * du[1] - do[1] * du[0] > 0 else -1
        out.append(dict(pt=pt, under_in=un[2], under_out=un[2] + 1, over_in=ov[2], over_out=ov[2] + 1, sign=sign))
    verts = []
    for v in vertices:
        ins = [i for i, s in enumerate(semis) if s["end"] == v]
        outs = [i for i, s in enumerate(semis) if s["start"] == v]
        verts.append(dict(pt=v, ins=ins, outs=outs))
    return semis, out, verts


def trace_faces(semis):
    he = []
    for i, s in enumerate(semis):
        he.append((s["start"], s["end"], math.atan2(s["d0"][1], s["d0"][0])))
        he.append((s["end"], s["start"], math.atan2(-s["d1"][1], -s["d1"][0])))
    out = {}
    for k, h in enumerate(he):
        out.setdefault(h[0], []).append(k)
    for n in out:
        out[n].sort(key=lambda k: he[k][2])
    face = {}
    nf = 0
    for k in range(len(he)):
        if k in face:
            continue
        cur = k
        while cur not in face:
            face[cur] = nf
            twin = cur ^ 1
            lst = out[he[cur][1]]
            cur = lst[(lst.index(twin) - 1) % len(lst)]
        nf += 1
    return nf, face


def diagram(name, edges, vertices, crossings, labels):
    semis, cr, vs = build(edges, vertices, crossings)
    nf, face = trace_faces(semis)
    counters = {}
    ids = []
    for s in semis:
        p = labels[s["edge"]]
        counters[p] = counters.get(p, 0) + 1
        ids.append(f"{p}{counters[p]}")
    # the normal points to the left of travel
    src = [face[2 * i + 1] for i in range(len(semis))]
    tgt = [face[2 * i] for i in range(len(semis))]
    rid = lambda f: f"r{f}"
    j = {"name": name, "regions": [rid(f) for f in range(nf)], "semiarcs": [], "closed": [], "crossings": [], "vertices": []}
    for i in range(len(semis)):
        j["semiarcs"].append({"id": ids[i], "region_source": rid(src[i]), "region_target": rid(tgt[i])})
    for k, c in enumerate(cr):
        lu = c["under_in"] if c["sign"] > 0 else c["under_out"]
        j["crossings"].append({
            "id": f"c{k + 1}", "sign": c["sign"],
            "under_in": ids[c["under_in"]], "under_out": ids[c["under_out"]],
            "over_in": ids[c["over_in"]], "over_out": ids[c["over_out"]],
            "weight_region": rid(src[lu]),
        })
    for k, v in enumerate(vs):
        if len(v["ins"]) == 2:
            pair, b, kind = v["ins"], v["outs"][0], "two_in_one_out"
        elif len(v["outs"]) == 2:
            pair, b, kind = v["outs"], v["ins"][0], "one_in_two_out"
        else:
            raise SystemExit(f"vertex {v['pt']} is not Y-oriented")
        a = [x for x in pair if src[x] == src[b]]
        if len(a) != 1:
            raise SystemExit(f"cannot place the legs at vertex {v['pt']}")
        a = a[0]
        c = pair[0] if pair[1] == a else pair[1]
        j["vertices"].append({"id": f"v{k + 1}", "kind": kind, "a_leg": ids[a], "b_leg": ids[b], "c_leg": ids[c],
                              "weight_region": rid(src[b])})
    return j


# 5_2 as drawn: two vertices joined by three edges, five crossings
FIVE_TWO = {
    "top": [(0, 30), (0, 50), (20, 50), (40, 50), (60, 50), (60, 30)],
    "mid": [(0, 30), (20, 30), (40, 30), (60, 30)],
    "bottom": [(60, 30), (60, 0), (40, 0), (30, 10), (20, 20), (20, 30), (20, 50), (20, 65), (40, 65), (40, 50),
               (40, 30), (40, 20), (30, 10), (20, 0), (0, 0), (0, 30)],
}
FIVE_TWO_CROSS = {(20, 50): ("bottom", None), (40, 50): ("top", None), (20, 30): ("mid", None),
                  (40, 30): ("bottom", None), (30, 10): ("bottom", 3)}
LABELS = {"top": "t", "mid": "m", "bottom": "b"}

# the same graph after a kink on the middle edge and a finger of the middle edge pushed over the top edge
VARIANT = {
    "top": [(0, 30), (0, 50), (8, 50), (12, 50), (20, 50), (40, 50), (60, 50), (60, 30)],
    "mid": [(0, 30), (8, 30), (8, 50), (8, 55), (12, 55), (12, 50), (12, 30), (20, 30), (24, 30), (27, 30),
            (30, 30), (30, 34), (27, 34), (27, 30), (27, 26), (34, 26), (40, 30), (60, 30)],
    "bottom": FIVE_TWO["bottom"],
}
VARIANT_CROSS = dict(FIVE_TWO_CROSS)
VARIANT_CROSS.update({(8, 50): ("mid", None), (12, 50): ("mid", None), (27, 30): ("mid", 9)})

THETA = {
    "top": [(0, 0), (5, 5), (10, 0)],
    "mid": [(0, 0), (10, 0)],
    "bottom": [(10, 0), (5, -5), (0, 0)],
}
THETA_KINK = {
    "top": THETA["top"],
    "mid": [(0, 0), (3, 0), (6, 0), (6, 2), (3, 2), (3, 0), (3, -2), (10, 0)],
    "bottom": THETA["bottom"],
}


def circle():
    return {"name": "circle", "regions": ["outside", "inside"],
            "semiarcs": [{"id": "s1", "region_source": "outside", "region_target": "inside"}],
            "closed": ["s1"], "crossings": [], "vertices": []}


def main(outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    fixtures = {
        "5_2.json": diagram("5_2", FIVE_TWO, [(0, 30), (60, 30)], FIVE_TWO_CROSS, LABELS),
        "5_2_r1r2.json": diagram("5_2 after one R1 and one R2 move", VARIANT, [(0, 30), (60, 30)], VARIANT_CROSS, LABELS),
        "theta.json": diagram("theta", THETA, [(0, 0), (10, 0)], {}, LABELS),
        "theta_kink.json": diagram("theta with a kink", THETA_KINK, [(0, 0), (10, 0)], {(3, 0): ("mid", 1)}, LABELS),
        "circle.json": circle(),
    }
    for fname, j in fixtures.items():
        (out / fname).write_text(json.dumps(j, indent=2) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
