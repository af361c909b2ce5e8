from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.sampler.managers.sampler_manager import SamplerManager
from modules.series.managers.series_manager import SeriesManager
from modules.series.managers.solver_manager import SolverManager
from modules.structure.managers.structure_manager import StructureManager


class SamplerManagerFactory(FactoryInterface):
    """ Factory for creating sampler manager object
    """
    def invoke(self, service_manager):
        return SamplerManager(
            series_manager=service_manager.get(SeriesManager.__name__),
            solver_manager=service_manager.get(SolverManager.__name__),
            structure_manager=service_manager.get(StructureManager.__name__)
        )
