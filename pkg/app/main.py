"""
Ponto de entrada da aplicação FastAPI.

Configura a aplicação, registra rotas e middleware,
e expõe a documentação OpenAPI com Scalar.
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from scalar_fastapi import get_scalar_api_reference

from app.api.error_handlers import register_error_handlers
from app.api.routes import health_router, reports_router, simulations_router
from app.core.config import get_settings

settings = get_settings()

app = FastAPI(
    title=settings.APP_NAME,
    version=settings.APP_VERSION,
    description="""
# ADRA CiM Simulator

Simulador bit-exato de computação em memória com ativação assimétrica de
duas linhas (ADRA) em arrays 1T-FeFET.

## Visão Geral

Duas linhas de palavra são ativadas com tensões de porta diferentes
(V_GREAD1 < V_GREAD2), de modo que os quatro vetores de entrada produzem
quatro correntes distintas na linha de sensoriamento. Três amplificadores
extraem (A OR B, A AND B, B); A é recuperado em lógica e o módulo de
cômputo produz soma, subtração e comparação a partir de **uma única
ativação**.

## Recursos

| Recurso | Descrição |
|---------|-----------|
| `POST /simulations` | Uma operação add/sub/cmp ponta a ponta |
| `POST /verifications` | Verificação exaustiva contra oráculos inteiros (w ≤ 8) |
| `GET /sweeps` | Speedup, energia e EDP por tamanho de array e esquema |
| `GET /crossovers` | Frequência f* e paralelismo P* entre os esquemas 1 e 2 |

## Esquemas de Sensoriamento

| Esquema | Descrição |
|---------|-----------|
| `current` | Sensoriamento por corrente com escada de referências |
| `scheme1` | Tensão; RBL mantida pré-carregada (paga fuga em hold) |
| `scheme2` | Tensão; RBL descarregada e recarregada a cada operação |

## Configuração

A API usa o arquivo TOML apontado por `CONFIG_PATH`; sem ele, os padrões
(array 1024×1024, palavras de 32 bits, sensoriamento por corrente, energia
calibrada).

Warnings de margem são **não-bloqueantes**.
""",
    openapi_tags=[
        {
            "name": "Simulações",
            "description": "Operações ponta a ponta e verificação contra oráculos.",
        },
        {
            "name": "Relatórios",
            "description": "Modelo analítico de energia e latência.",
        },
        {
            "name": "Health",
            "description": "Verificação de saúde e constantes do modelo.",
        },
    ],
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json",
    license_info={
        "name": "Proprietário",
        "url": "https://example.com/license",
    },
)

# === Middleware ===

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# === Error Handlers ===

register_error_handlers(app)

# === Rotas ===

app.include_router(health_router)
app.include_router(simulations_router)
app.include_router(reports_router)


# === Scalar API Reference ===

@app.get("/scalar", include_in_schema=False)
async def scalar_html():
    """Documentação interativa com Scalar."""
    return get_scalar_api_reference(
        openapi_url=app.openapi_url,
        title=app.title,
    )


@app.get("/", include_in_schema=False)
async def root() -> dict[str, str]:
    """Links da documentação."""
    return {
        "message": settings.APP_NAME,
        "docs": "/docs",
        "scalar": "/scalar",
        "openapi": "/openapi.json",
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "app.main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG,
    )
