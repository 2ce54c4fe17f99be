"""Pure-Python kernels, used when the compiled extension is unavailable."""


def levenshtein(a, b) -> int:
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    if m > n:
        a, b, n, m = b, a, m, n
    row = list(range(m + 1))
    for i in range(1, n + 1):
        ai = a[i - 1]
        diag = row[0]
        row[0] = i
        for j in range(1, m + 1):
            up = row[j]
            cost = diag if ai == b[j - 1] else diag + 1
            left = row[j - 1] + 1
            if up + 1 < cost:
                cost = up + 1
            row[j] = left if left < cost else cost
            diag = up
    return row[m]
