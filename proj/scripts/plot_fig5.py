#!/usr/bin/env python3
"""Plot the y(g t) columns of a fig5 CSV produced by delta-atom."""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("--out", default="fig5.png")
    args = ap.parse_args()

    df = pd.read_csv(args.csv, comment="#")
    fig, ax = plt.subplots(figsize=(6, 4))
    for col in df.columns:
        if col.startswith("y_pi_"):
            ax.plot(df["g_t"], df[col], label=r"$\theta=\pi/%s$" % col[len("y_pi_"):])
    ax.set_xlabel(r"$g t$")
    ax.set_ylabel(r"$y$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)


if __name__ == "__main__":
    main()
