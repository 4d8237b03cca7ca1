"""Brute-force oracles written independently of the package."""
from functools import cache
from itertools import permutations, product


def knuth_moves(u):
    u = tuple(u)
    out = []
    for k in range(len(u) - 2):
        a, b, c = u[k:k + 3]
        # x z y ~ z x y when x <= y < z
        if a <= c < b:
            out.append(u[:k] + (b, a, c) + u[k + 3:])
        if b <= c < a:
            out.append(u[:k] + (b, a, c) + u[k + 3:])
        # y x z ~ y z x when x < y <= z
        if b < a <= c:
            out.append(u[:k] + (a, c, b) + u[k + 3:])
        if c < a <= b:
            out.append(u[:k] + (a, c, b) + u[k + 3:])
    return out


def knuth_closure(u):
    seen = {tuple(u)}
    frontier = [tuple(u)]
    while frontier:
        nxt = []
        for v in frontier:
            for w in knuth_moves(v):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def is_tableau_reading_word(u):
    """Split into maximal weakly increasing runs; they must be the rows of a
    tableau read bottom to top."""
    if not u:
        return True
    rows = [[u[0]]]
    for x in u[1:]:
        if x >= rows[-1][-1]:
            rows[-1].append(x)
        else:
            rows.append([x])
    rows.reverse()
    for top, bot in zip(rows, rows[1:]):
        if len(bot) > len(top):
            return False
        if any(bot[j] <= top[j] for j in range(len(bot))):
            return False
    return True


def ls_charge(word):
    """Lascoux-Schutzenberger charge, words of partition content."""
    w = list(word)
    total = 0
    while w:
        n = max(w)
        # extract a standard subword reading leftwards cyclically from the right end
        idx = []
        pos = len(w)
        for k in range(1, n + 1):
            cands = [p for p in range(pos - 1, -1, -1) if w[p] == k]
            if cands:
                pos = cands[0]
                idx.append((pos, False))
            else:
                cands = [p for p in range(len(w) - 1, -1, -1) if w[p] == k]
                pos = cands[0]
                idx.append((pos, True))
        c = 0
        for k, (_, wrapped) in enumerate(idx):
            if k and wrapped:
                c += 1
            total += c
        keep = set(p for p, _ in idx)
        w = [x for p, x in enumerate(w) if p not in keep]
    return total


def ssyt(shape, content):
    """All semistandard tableaux, brute force over fillings."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = []
    for k, m in enumerate(content, 1):
        letters += [k] * m
    if len(letters) != len(cells):
        return []
    out = set()
    for perm in set(permutations(letters)):
        T = {}
        for c, x in zip(cells, perm):
            T[c] = x
        ok = all(T[(i, j)] <= T[(i, j + 1)] for (i, j) in cells if (i, j + 1) in T)
        ok = ok and all(T[(i, j)] < T[(i + 1, j)] for (i, j) in cells if (i + 1, j) in T)
        if ok:
            out.add(tuple(tuple(T[(i, j)] for j in range(row)) for i, row in enumerate(shape)))
    return sorted(out)


def reading(T):
    return tuple(x for row in reversed(T) for x in row)


def kf_by_charge(lam, mu):
    out = {}
    for T in ssyt(lam, mu):
        c = ls_charge(reading(T))
        out[c] = out.get(c, 0) + 1
    return _dense(out)


def kf_lusztig(lam, mu):
    """Kostka-Foulkes polynomial as Lusztig's q-analogue of weight
    multiplicity: sum over w of sign(w) P_t(w(lam+rho) - (mu+rho))."""
    n = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    rho = tuple(range(n - 1, -1, -1))
    out = {}
    for w in permutations(range(n)):
        sign = (-1) ** sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        beta = tuple(lam[w[k]] + rho[w[k]] - mu[k] - rho[k] for k in range(n))
        for d, c in kostant(beta).items():
            out[d] = out.get(d, 0) + sign * c
    return _dense(out)


@cache
def kostant(beta):
    """t-Kostant partition function: {number of roots: ways}."""
    n = len(beta)
    roots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return _kostant(beta, tuple(roots))


@cache
def _kostant(beta, roots):
    if not roots:
        return {0: 1} if not any(beta) else {}
    if sum(beta) != 0:
        return {}
    acc = 0
    for x in beta[:-1]:
        acc += x
        if acc < 0:
            return {}
    (i, j), rest = roots[0], roots[1:]
    out = {}
    m = 0
    b = list(beta)
    while True:
        for d, c in _kostant(tuple(b), rest).items():
            out[d + m] = out.get(d + m, 0) + c
        b[i] -= 1
        b[j] += 1
        m += 1
        if sum(b[:i + 1]) < 0:
            break
    return out


def _dense(d):
    d = {k: v for k, v in d.items() if v}
    if not d:
        return ()
    return tuple(d.get(k, 0) for k in range(max(d) + 1))


def lr_lattice(lam, mu, nu):
    """Skew tableaux of shape lam/mu, content nu, whose reverse reading word
    is a lattice word."""
    lam = tuple(lam)
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    if sum(lam) - sum(mu) != sum(nu):
        return 0
    cells = [(i, j) for i in range(len(lam)) for j in range(mu[i], lam[i])]
    count = 0
    for fill in product(range(1, len(nu) + 1), repeat=len(cells)):
        if any(fill.count(k + 1) != nu[k] for k in range(len(nu))):
            continue
        T = dict(zip(cells, fill))
        if any(T[(i, j)] > T[(i, j + 1)] for (i, j) in cells if (i, j + 1) in T):
            continue
        if any(T[(i, j)] >= T[(i + 1, j)] for (i, j) in cells if (i + 1, j) in T):
            continue
        # reverse reading word: right to left along rows, top to bottom
        word = [T[(i, j)] for i in range(len(lam)) for j in range(lam[i] - 1, mu[i] - 1, -1)]
        seen = [0] * (len(nu) + 2)
        ok = True
        for x in word:
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                ok = False
                break
        count += ok
    return count
