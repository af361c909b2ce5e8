import os
import sys
from collections import Counter
from dotenv import load_dotenv
from modules.asymptotics.data.asymptotics_data import AsymptoticsData
from modules.asymptotics.managers.expectation_manager import ExpectationManager
from modules.asymptotics.managers.singularity_manager import SingularityManager
from modules.order.data.order_data import OrderData
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.sampler.managers.sampler_manager import SamplerManager
from modules.structure.managers.order_manager import OrderManager
from modules.util.data.table_data import TableData
from service_locator import get_service_manager

""" Script for writing the expectation, tail and singularity tables and checking their bounds
"""

EXPECTATION_TRUNCATION = 2048
EXPECTATION_SIZES = [4, 16, 64, 256, 512, 1024, 2048]
EXPECTATION_CHECKED = [512, 1024, 2048]
EXPECTATION_REFERENCE = 256
RATIO_BOUNDS = (0.9, 1.1)
TAIL_SIZE = 1024
TAIL_DEVIATIONS = [1, 2, 3, 4, 5]
TAIL_CONSTANT_BOUND = 8
SAMPLE_SIZE = 200
SAMPLE_DRAWS = 100000
SAMPLE_SEED = 5
SAMPLE_DISTANCE_BOUND = 0.02


if __name__ == '__main__':
    load_dotenv()
    target = sys.argv[1] if len(sys.argv) > 1 else "acceptance"
    failures = []
    try:
        os.makedirs(target, exist_ok=True)
        service_locator = get_service_manager()
        spectrum_manager: SpectrumManager = service_locator.get(SpectrumManager.__name__)
        distribution_manager: DistributionManager = service_locator.get(DistributionManager.__name__)
        expectation_manager: ExpectationManager = service_locator.get(ExpectationManager.__name__)
        singularity_manager: SingularityManager = service_locator.get(SingularityManager.__name__)
        sampler_manager: SamplerManager = service_locator.get(SamplerManager.__name__)
        asymptotics_data: AsymptoticsData = service_locator.get(AsymptoticsData.__name__)
        order_data: OrderData = service_locator.get(OrderData.__name__)
        table_data: TableData = service_locator.get(TableData.__name__)

        print(f"Building order spectrum through z^{EXPECTATION_TRUNCATION}...")
        spectrum = spectrum_manager.build(EXPECTATION_TRUNCATION)

        rows = expectation_manager.report(spectrum, EXPECTATION_SIZES, reference=EXPECTATION_REFERENCE)
        with open(os.path.join(target, "expectation.csv"), "w") as handle:
            handle.write(asymptotics_data.expectation_csv(rows))
        print("expectation.csv written...")
        for row in rows:
            if row.get_n() in EXPECTATION_CHECKED and not RATIO_BOUNDS[0] <= row.get_ratio() <= RATIO_BOUNDS[1]:
                failures.append(f"E/log4n at n={row.get_n()} is {table_data.render_value(row.get_ratio())}")
        if not ExpectationManager.trend_holds(rows, EXPECTATION_REFERENCE):
            failures.append(f"|E - log4n| at n={EXPECTATION_SIZES[-1]} exceeds its value at n={EXPECTATION_REFERENCE}")

        tail_rows = order_data.tail_rows(spectrum, TAIL_SIZE, TAIL_DEVIATIONS)
        constant = distribution_manager.tail_constant(spectrum, TAIL_SIZE, TAIL_DEVIATIONS)
        for row in tail_rows:
            row["constant"] = constant
        with open(os.path.join(target, "tail.csv"), "w") as handle:
            handle.write(table_data.render_rows(tail_rows, "csv"))
        print(f"tail.csv written, calibrated constant {table_data.render_value(constant)}...")
        if constant > TAIL_CONSTANT_BOUND:
            failures.append(f"tail constant {table_data.render_value(constant)} above {TAIL_CONSTANT_BOUND}")

        report = singularity_manager.locate_singularity(20, spectrum.get_base())
        with open(os.path.join(target, "singularity.json"), "w") as handle:
            handle.write(asymptotics_data.report_json(report))
        print("singularity.json written...")

        print(f"Drawing {SAMPLE_DRAWS} structures of size {SAMPLE_SIZE}...")
        tables = sampler_manager.build_tables(SAMPLE_SIZE)
        probabilities = distribution_manager.distribution(spectrum, SAMPLE_SIZE).get_probabilities()
        orders = Counter(
            OrderManager.order_fast(structure)
            for structure in sampler_manager.sample_many(tables, SAMPLE_SIZE, SAMPLE_SEED, SAMPLE_DRAWS)
        )
        distance = sum(
            abs(orders[p] / SAMPLE_DRAWS - (float(probabilities[p]) if p < len(probabilities) else 0.0))
            for p in set(range(len(probabilities))) | set(orders)
        ) / 2
        print(f"Sampled order distance {distance:.4f}...")
        if distance >= SAMPLE_DISTANCE_BOUND:
            failures.append(f"sampled order distance {distance:.4f} at n={SAMPLE_SIZE}")
    except Exception as e:
        print(f"Error writing acceptance tables: {str(e)}")
        sys.exit(1)

    if failures:
        for failure in failures:
            print(f"Failed: {failure}")
        sys.exit(1)
    print("All acceptance bounds hold")
