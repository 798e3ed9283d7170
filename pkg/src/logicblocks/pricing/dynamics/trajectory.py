import csv
import io
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from logicblocks.pricing.equilibrium import PriceVector
from logicblocks.pricing.types import Vector
from logicblocks.pricing.utils import format_number

THINNING_LIMIT = 1000


@dataclass(frozen=True, eq=False)
class TrajectoryRecord:
    """Every iterate of one learning run, with its distance to the
    equilibrium and the firm revenue at each step.

    `iterates[0]` is the starting point, so `steps` is always one less
    than the number of iterates.
    """

    iterates: Sequence[PriceVector]
    dist_to_ne: Vector
    revenues: Vector
    converged: bool
    steps: int
    equilibrium: PriceVector

    @property
    def last(self) -> PriceVector:
        return self.iterates[-1]

    @property
    def average_iterate(self) -> PriceVector:
        """Time average of all iterates, starting point included."""
        return PriceVector(
            np.mean(np.stack([p.p for p in self.iterates]), axis=0)
        )

    @property
    def average_dist_to_ne(self) -> float:
        return self.average_iterate.distance_to(self.equilibrium)


def thinned_steps(steps: int, limit: int = THINNING_LIMIT) -> list[int]:
    """Step numbers kept when storing a trajectory.

    Every step is kept up to `limit` steps; beyond that the kept steps
    are geometrically spaced, always including the first and the last.
    """
    if steps <= limit:
        return list(range(steps + 1))
    spaced = np.geomspace(1, steps, num=limit)
    kept = {0, steps, *(int(step) for step in np.rint(spaced))}
    return sorted(kept)


def trajectory_csv(
    record: TrajectoryRecord, limit: int = THINNING_LIMIT
) -> str:
    """Render `step,dist_to_ne,revenue,p_0..p_{n-1}` rows."""
    n = len(record.iterates[0])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["step", "dist_to_ne", "revenue", *(f"p_{i}" for i in range(n))]
    )
    for step in thinned_steps(record.steps, limit):
        writer.writerow(
            [
                str(step),
                format_number(float(record.dist_to_ne[step])),
                format_number(float(record.revenues[step])),
                *(
                    format_number(float(price))
                    for price in record.iterates[step].p
                ),
            ]
        )
    return buffer.getvalue()
