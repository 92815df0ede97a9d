HILBERT_TABLE: dict[int, tuple[int, ...]] = {
    -3: (0, 1),
    -4: (-1728, 1),
    -7: (3375, 1),
    -8: (-8000, 1),
    -11: (32768, 1),
    -12: (-54000, 1),
    -15: (-121287375, 191025, 1),
    -16: (-287496, 1),
    -19: (884736, 1),
    -20: (-681472000, -1264000, 1),
    -23: (12771880859375, -5151296875, 3491750, 1),
    -24: (14670139392, -4834944, 1),
    -27: (12288000, 1),
    -28: (-16581375, 1),
    -31: (1566028350940383, -58682638134, 39491307, 1),
    -32: (12167000000, -52250000, 1),
    -36: (-1790957481984, -153542016, 1),
    -43: (884736000, 1),
    -47: (16042929600623870849609375, -14982472850828613281250, 5115161850595703125, -9987963828125, 2257834125, 1),
    -64: (-7367066619912, -82226316240, 1),
    -67: (147197952000, 1),
    -163: (262537412640768000, 1),
}
