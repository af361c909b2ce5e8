from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.series.data.factories.series_data_factory import SeriesDataFactory
from modules.series.data.series_data import SeriesData
from modules.series.managers.factories.series_manager_factory import SeriesManagerFactory
from modules.series.managers.factories.solver_manager_factory import SolverManagerFactory
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager


class SeriesConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            SeriesManager.__name__: SeriesManagerFactory(),
            SolverManager.__name__: SolverManagerFactory(),
            SeriesData.__name__: SeriesDataFactory()
        }
