from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager


class SpectrumManagerFactory(FactoryInterface):
    """ Factory for creating spectrum manager object
    """
    def invoke(self, service_manager):
        return SpectrumManager(
            series_manager=service_manager.get(SeriesManager.__name__),
            solver_manager=service_manager.get(SolverManager.__name__)
        )
